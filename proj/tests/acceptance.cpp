// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "taba/allocator.hpp"
#include "taba/betafit.hpp"
#include "taba/infomodel.hpp"
#include "taba/json_io.hpp"
#include "taba/relatedness.hpp"
#include "taba/simulator.hpp"
#include "worlds.hpp"

namespace {

namespace fs = std::filesystem;
using namespace taba;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

// 1. solve_dp against exhaustive enumeration.
Outcome oracle_equivalence() {
  const auto t0 = Clock::now();
  std::mt19937_64 gen(20260101);
  int objective_ok = 0;
  int counts_ok = 0;
  constexpr int kInstances = 1000;
  for (int t = 0; t < kInstances; ++t) {
    const auto inst = testing::random_instance(gen);
    const Allocation a = solve_dp(inst.tasks, inst.profile);
    const auto ref = testing::enumerate_best(inst.tasks, inst.profile);
    objective_ok += a.objective == ref.objective;
    counts_ok += a.counts == ref.counts;
  }
  const double secs = seconds_since(t0);
  return {objective_ok == kInstances && counts_ok == kInstances && secs < 30.0,
          fmt("%d/%d objectives exact, %d/%d count vectors equal, %.2f s (limit 30 s)",
              objective_ok, kInstances, counts_ok, kInstances, secs)};
}

// 2. beta = 1 everywhere: the whole budget goes to the best I/c task.
Outcome linear_degeneracy() {
  std::mt19937_64 gen(20260202);
  std::uniform_int_distribution<int> k_dist(2, 4);
  std::uniform_int_distribution<Count> c_dist(1, 5);
  std::uniform_int_distribution<Count> m_dist(0, 12);
  std::uniform_real_distribution<double> i_dist(-1.0, 3.0);
  int ok = 0;
  int generated = 0;
  while (generated < 100) {
    const int k = k_dist(gen);
    TaskSet ts;
    InformationProfile prof{Eigen::VectorXd(k), Eigen::VectorXd::Ones(k)};
    for (int i = 0; i < k; ++i) {
      ts.tasks.push_back({"t" + std::to_string(i), c_dist(gen), false});
      prof.informativeness(i) = i_dist(gen);
    }
    Eigen::VectorXd ratio(k);
    for (int i = 0; i < k; ++i) ratio(i) = prof.informativeness(i) / double(ts.tasks[i].cost);
    Eigen::Index best = 0;
    ratio.maxCoeff(&best);
    bool distinct = ratio(best) > 0.0;
    for (int i = 0; i < k && distinct; ++i) {
      for (int j = i + 1; j < k; ++j) distinct &= std::abs(ratio(i) - ratio(j)) > 1e-6;
    }
    if (!distinct) continue;
    ++generated;
    // Integer knapsack only guarantees the all-in answer when the best
    // task's cost divides the budget.
    ts.budget = ts.tasks[best].cost * m_dist(gen);
    const Allocation a = solve_dp(ts, prof);
    CountVector expect = CountVector::Zero(k);
    expect(best) = ts.budget / ts.tasks[best].cost;
    Count min_positive_cost = ts.budget + 1;
    for (int i = 0; i < k; ++i) {
      if (prof.informativeness(i) > 0.0) min_positive_cost = std::min(min_positive_cost, ts.tasks[i].cost);
    }
    ok += a.counts == expect && ts.budget - a.spent < min_positive_cost;
  }
  return {ok == 100, fmt("%d/100 instances spend the budget on argmax I/c", ok)};
}

// 3. Fitted reduction rates on noiseless curves.
Outcome beta_recovery() {
  const auto t0 = Clock::now();
  struct Case {
    double beta;
    std::vector<Count> ns;
  };
  auto span = [](Count from, Count to, Count step) {
    std::vector<Count> v;
    for (Count n = from; n <= to; n += step) v.push_back(n);
    return v;
  };
  const std::vector<Case> cases{{0.5, span(1, 10, 1)},
                                {0.9, {1, 5, 10, 20, 50, 100}},
                                {0.99, span(10, 1000, 30)},
                                {0.999, span(50, 1000, 50)},
                                {0.9997, span(500, 10000, 500)}};
  bool pass = true;
  std::ostringstream detail;
  for (const auto& c : cases) {
    LearningCurve curve{"synthetic", {}};
    for (Count n : c.ns) curve.points.push_back({n, testing::summed_gather(0.01, c.beta, n)});
    const BetaFit fit = fit_reduction_rate(curve);
    const double tol = c.beta >= 0.99 ? 5e-4 : 1e-3;
    const double err = std::abs(fit.beta - c.beta);
    pass &= err <= tol && fit.residual < 1e-6;
    detail << fmt("beta %.4g: |err| %.2e (tol %.0e) residual %.1e; ", c.beta, err, tol, fit.residual);
  }
  const double secs = seconds_since(t0);
  pass &= secs < 5.0;
  detail << fmt("%.2f s (limit 5 s)", secs);
  return {pass, detail.str()};
}

// 4. Closed form vs summation for every N up to 10^6, plus sampled
// monotonicity, concavity and boundedness.
Outcome gather_correctness() {
  double worst = 0.0;
  for (double beta : {0.0, 0.5, 0.9, 0.999, 1.0}) {
    double sum = 0.0;
    double carry = 0.0;
    double term = 1.0;
    for (Count n = 1; n <= 1'000'000; ++n) {
      const double y = term - carry;
      const double t = sum + y;
      carry = (t - sum) - y;
      sum = t;
      term *= beta;
      worst = std::max(worst, std::abs(gather(1.0, beta, n) - sum) / sum);
    }
  }
  std::mt19937_64 gen(20260404);
  std::uniform_real_distribution<double> info(0.0, 10.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<Count> count(0, 1'000'000);
  int violations = 0;
  for (int t = 0; t < 100000; ++t) {
    const double i = info(gen);
    const double p = unit(gen);
    const double b = p < 0.05 ? 0.0 : p < 0.1 ? 1.0 : unit(gen);
    const Count n = count(gen);
    const double g = gather(i, b, n);
    if (gather(i, b, n + 1) < g) ++violations;
    if (marginal(i, b, n + 1) > marginal(i, b, n)) ++violations;
    if (b < 1.0 && g > i / (1.0 - b) * (1.0 + 1e-12)) ++violations;
  }
  return {worst <= 1e-9 && violations == 0,
          fmt("max relative error %.2e over N <= 1e6 (limit 1e-9); %d invariant violations in "
              "1e5 samples",
              worst, violations)};
}

// 5. Greedy against DP.
Outcome greedy_quality() {
  const auto t0 = Clock::now();
  std::mt19937_64 gen(20260505);
  testing::InstanceLimits equal;
  equal.equal_costs = true;
  int equal_ok = 0;
  int equal_counts = 0;
  for (int t = 0; t < 500; ++t) {
    const auto inst = testing::random_instance(gen, equal);
    const Allocation g = solve_greedy(inst.tasks, inst.profile);
    const Allocation d = solve_dp(inst.tasks, inst.profile);
    equal_ok += g.objective == d.objective;
    equal_counts += g.counts == d.counts;
  }
  int bounded = 0;
  for (int t = 0; t < 500; ++t) {
    const auto inst = testing::random_instance(gen);
    const Allocation g = solve_greedy(inst.tasks, inst.profile);
    const Allocation d = solve_dp(inst.tasks, inst.profile);
    const double slack = std::max(0.0, inst.profile.informativeness.maxCoeff());
    bounded += g.spent <= inst.tasks.budget && g.objective >= d.objective - slack;
  }
  const double secs = seconds_since(t0);
  return {equal_ok == 500 && equal_counts == 500 && bounded == 500 && secs < 60.0,
          fmt("equal costs: %d/500 objectives, %d/500 counts identical; unequal: %d/500 within "
              "max I; %.2f s (limit 60 s)",
              equal_ok, equal_counts, bounded, secs)};
}

Outcome fixture_case(const char* name, const SimWorld& world, double* solve_secs) {
  const InformationProfile prof = true_profile(world);
  const auto t0 = Clock::now();
  const Allocation taba = solve(world.task_set, prof, SolverChoice::kAuto);
  *solve_secs = seconds_since(t0);
  std::vector<Allocation> baselines{baseline_equal_images(world.task_set, prof),
                                    baseline_same_images(world.task_set, prof),
                                    baseline_equal_budget(world.task_set, prof)};
  for (Eigen::Index i = 0; i < world.task_set.size(); ++i) {
    baselines.push_back(baseline_single_task(world.task_set, prof, i));
  }
  double margin = INFINITY;
  for (const auto& b : baselines) margin = std::min(margin, taba.objective - b.objective);

  const StrategyReport report = compare_strategies(world, prof);
  double delta_margin = INFINITY;
  for (std::size_t r = 1; r < report.rows.size(); ++r) {
    delta_margin = std::min(delta_margin, report.rows[0].overall_gain - report.rows[r].overall_gain);
  }
  return {margin > 0.0 && delta_margin >= 0.0,
          fmt("%s: solver %s, objective margin over best baseline %.6g, delta_T margin %.6g",
              name, taba.solver.c_str(), margin, delta_margin)};
}

// 6. Published fixtures: the allocator beats every baseline.
Outcome fixture_dominance() {
  double pascal_secs = 0.0;
  double taskonomy_secs = 0.0;
  const Outcome p = fixture_case("pascal", testing::pascal_world(), &pascal_secs);
  const Outcome t = fixture_case("taskonomy", testing::taskonomy_world(), &taskonomy_secs);
  return {p.pass && t.pass && taskonomy_secs < 10.0,
          p.detail + "; " + t.detail + fmt(" (solve %.3f s, limit 10 s)", taskonomy_secs)};
}

// 7. Two-task budget sweep rises then falls.
Outcome sweep_shape() {
  const auto sweep = sweep_two_task_split(testing::pascal_world(), 21);
  int changes = 0;
  int first = 0;
  int last = 0;
  for (std::size_t s = 1; s < sweep.size(); ++s) {
    const double d = sweep[s].overall_gain - sweep[s - 1].overall_gain;
    const int sign = d > 0 ? 1 : d < 0 ? -1 : 0;
    if (sign == 0) continue;
    if (first == 0) first = sign;
    if (last != 0 && sign != last) ++changes;
    last = sign;
  }
  const auto peak = std::max_element(sweep.begin(), sweep.end(), [](const auto& a, const auto& b) {
    return a.overall_gain < b.overall_gain;
  });
  return {sweep.size() == 21 && changes == 1 && first == 1 && last == -1,
          fmt("%zu points, %d sign change(s), peak delta_T %.3f%% at split %.2f (ends %.3f%% / %.3f%%)",
              sweep.size(), changes, peak->overall_gain, peak->split_fraction,
              sweep.front().overall_gain, sweep.back().overall_gain)};
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

// 8. Repeated CLI runs are byte-identical; transfer estimation ignores
// record order.
Outcome determinism() {
  const fs::path fixtures = TABA_FIXTURE_DIR;
  const fs::path dir = fs::temp_directory_path() / "taba_acceptance";
  fs::remove_all(dir);
  fs::create_directories(dir);
  {
    Json w = read_json_file(fixtures / "pascal_voc_world.json");
    w["noise_std"] = 0.005;
    std::ofstream(dir / "noisy_world.json") << w.dump(2);
  }
  const std::string cli = TABA_CLI_PATH;
  const std::string f = fixtures.string() + "/";
  auto commands = [&](const std::string& tag) {
    const std::string o = (dir / tag).string();
    return std::vector<std::pair<std::string, std::vector<std::string>>>{
        {"relatedness " + f + "pascal_probes.json --out " + o + "_m.json", {o + "_m.json"}},
        {"fit-beta " + f + "pascal_curves.json --out " + o + "_b.json", {o + "_b.json"}},
        {"allocate --tasks " + f + "pascal_voc.json --out " + o + "_a.json", {o + "_a.json"}},
        {"allocate --tasks " + f + "taskonomy.json --out " + o + "_t.json", {o + "_t.json"}},
        {"simulate --world " + (dir / "noisy_world.json").string() + " --seed 9 --sweep --out " + o +
             "_s.json",
         {o + "_s.json", o + "_s_sweep.csv"}},
        {"run --tasks " + f + "pascal_voc.json --probes " + f + "pascal_probes.json --curves " + f +
             "pascal_curves.json --world " + f + "pascal_voc_world.json --sweep --out " + o + "_run",
         {o + "_run/allocation.json", o + "_run/report.json", o + "_run/sweep.csv"}}};
  };
  int identical = 0;
  int total = 0;
  bool ran = true;
  const auto a = commands("a");
  const auto b = commands("b");
  for (std::size_t c = 0; c < a.size(); ++c) {
    for (const auto* run : {&a[c], &b[c]}) {
      ran &= std::system((cli + " " + run->first + " > /dev/null").c_str()) == 0;
    }
    for (std::size_t k = 0; k < a[c].second.size(); ++k) {
      ++total;
      const std::string x = slurp(a[c].second[k]);
      identical += !x.empty() && x == slurp(b[c].second[k]);
    }
  }
  fs::remove_all(dir);

  std::mt19937_64 gen(20260808);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<ProbeRecord> log;
  for (int step = 0; step < 50; ++step) {
    for (Eigen::Index i = 0; i < 5; ++i) {
      for (Eigen::Index j = 0; j < 5; ++j) {
        if (i != j) log.push_back({step * 10, i, j, u(gen), 0.6 + u(gen) / 4, -0.4 + u(gen) / 4});
      }
    }
  }
  const TransferMatrix ref = estimate_transfer(log, 5);
  int same = 0;
  for (int t = 0; t < 50; ++t) {
    std::shuffle(log.begin(), log.end(), gen);
    same += estimate_transfer(log, 5) == ref;
  }
  return {ran && identical == total && same == 50,
          fmt("%d/%d output files byte-identical across runs; %d/50 shuffled logs give the same "
              "matrix",
              identical, total, same)};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"AC1 DP matches exhaustive enumeration", oracle_equivalence},
      {"AC2 beta = 1 degeneracy", linear_degeneracy},
      {"AC3 beta-fit recovery", beta_recovery},
      {"AC4 gather function correctness", gather_correctness},
      {"AC5 greedy quality", greedy_quality},
      {"AC6 fixture dominance", fixture_dominance},
      {"AC7 budget sweep shape", sweep_shape},
      {"AC8 determinism", determinism},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    failed += !o.pass;
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << name << ": " << o.detail << std::endl;
  }
  std::cout << (failed == 0 ? "all acceptance criteria passed" : "acceptance FAILED") << std::endl;
  return failed == 0 ? 0 : 1;
}
