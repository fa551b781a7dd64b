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

#include "taba/allocator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <vector>

#include "taba/errors.hpp"
#include "taba/infomodel.hpp"

namespace taba {
namespace {

constexpr Count kCountMax = std::numeric_limits<Count>::max();

Count saturate(__int128 v) { return v > kCountMax ? kCountMax : static_cast<Count>(v); }

std::vector<std::string> exclusion_notes(const TaskSet& ts, const InformationProfile& prof) {
  std::vector<std::string> notes;
  for (Eigen::Index i = 0; i < ts.size(); ++i) {
    if (prof.informativeness(i) <= 0.0) {
      notes.push_back("task '" + ts.tasks[i].id +
                      "' excluded from purchase: non-positive informativeness");
    }
  }
  return notes;
}

Allocation finish(const TaskSet& ts, const InformationProfile& prof, CountVector counts,
                  std::string solver) {
  Allocation a;
  a.spent = spend(ts, counts);
  a.objective = objective(ts, prof, counts);
  a.counts = std::move(counts);
  a.solver = std::move(solver);
  return a;
}

// (prefix_a, tail_a) <lex (prefix_b, tail_b)
bool lex_less(std::span<const Count> prefix_a, Count tail_a, std::span<const Count> prefix_b,
              Count tail_b) {
  for (std::size_t t = 0; t < prefix_a.size(); ++t) {
    if (prefix_a[t] != prefix_b[t]) return prefix_a[t] < prefix_b[t];
  }
  return tail_a < tail_b;
}

// Labels of a task still worth buying from count n on: marginals are
// decreasing, so the positive ones form a prefix.
Count positive_labels_left(double informativeness, double beta, Count n, Count cap) {
  if (informativeness <= 0.0) return 0;
  if (beta == 0.0) return n == 0 ? std::min<Count>(1, cap) : 0;
  return cap;
}

void greedy_fill(const TaskSet& ts, const InformationProfile& prof, CountVector& counts,
                 Count& remaining) {
  const Eigen::Index k = ts.size();
  for (;;) {
    Eigen::Index best = -1;
    double best_ratio = 0.0;
    for (Eigen::Index i = 0; i < k; ++i) {
      const Count cost = ts.tasks[i].cost;
      if (cost > remaining) continue;
      const double m = marginal(prof.informativeness(i), prof.beta(i), counts(i));
      if (!(m > 0.0)) continue;
      const double ratio = m / static_cast<double>(cost);
      if (best < 0 || ratio > best_ratio) {
        best = i;
        best_ratio = ratio;
      }
    }
    if (best < 0) return;
    counts(best) += 1;
    remaining -= ts.tasks[best].cost;
  }
}

// Drops trailing labels whose value is lost to rounding, so both solvers
// report the smallest allocation among float-equal optima they reach.
void trim_absorbed(const TaskSet& ts, const InformationProfile& prof, CountVector& counts) {
  double current = objective(ts, prof, counts);
  for (Eigen::Index i = 0; i < counts.size(); ++i) {
    while (counts(i) > 0) {
      counts(i) -= 1;
      const double value = objective(ts, prof, counts);
      if (value < current) {
        counts(i) += 1;
        break;
      }
      current = value;
    }
  }
}

}  // namespace

double objective(const TaskSet& ts, const InformationProfile& prof, const CountVector& counts) {
  if (counts.size() != prof.size() || counts.size() != ts.size()) {
    throw DomainError("count vector length does not match the task count");
  }
  double total = 0.0;
  for (Eigen::Index i = 0; i < counts.size(); ++i) {
    if (counts(i) < 0) throw DomainError("label counts must be non-negative");
    total += gather(prof.informativeness(i), prof.beta(i), counts(i));
  }
  return total;
}

Count dp_cell_updates(const TaskSet& ts) {
  const Eigen::Index k = ts.size();
  const __int128 budget = ts.budget;
  if (k == 1) return saturate(budget / ts.tasks[0].cost + 1);
  __int128 cells = budget + 1;
  for (Eigen::Index i = 1; i + 1 < k; ++i) {
    const __int128 c = ts.tasks[i].cost;
    const __int128 q = budget / c;
    const __int128 r = budget % c;
    // sum_{b=0..B} floor(b / c) = c q (q - 1) / 2 + q (r + 1)
    cells += c * q * (q - 1) / 2 + q * (r + 1) + budget + 1;
    if (cells > kCountMax) return kCountMax;
  }
  cells += budget / ts.tasks[k - 1].cost + 1;
  return saturate(cells);
}

Allocation solve_dp(const TaskSet& ts, const InformationProfile& prof, Count cell_limit) {
  require_compatible(ts, prof);
  const Count cells = dp_cell_updates(ts);
  if (cells > cell_limit) throw DpTooLargeError(cells, cell_limit);

  const Eigen::Index k = ts.size();
  const Count budget = ts.budget;
  const auto width = static_cast<std::size_t>(budget + 1);

  // Layer i holds, for each budget b, the best value of tasks 0..i with
  // spend <= b and the lexicographically smallest prefix achieving it.
  std::vector<double> prev_value(width, 0.0);
  std::vector<Count> prev_prefix;
  std::vector<double> value;
  std::vector<Count> prefix;
  CountVector result = CountVector::Zero(k);

  for (Eigen::Index i = 0; i < k; ++i) {
    const Count cost = ts.tasks[i].cost;
    const Count cap = budget / cost;
    std::vector<double> gains(static_cast<std::size_t>(cap + 1));
    for (Count n = 0; n <= cap; ++n) {
      gains[static_cast<std::size_t>(n)] =
          gather(prof.informativeness(i), prof.beta(i), n);
    }
    const auto plen = static_cast<std::size_t>(i);  // prefix length before task i
    const bool last = i + 1 == k;
    const Count b_first = last ? budget : 0;
    value.assign(width, 0.0);
    prefix.assign(width * (plen + 1), 0);

    if (i == 0) {
      // Empty prefix: the best is a running argmax over affordable n.
      Count best_n = 0;
      double best = prev_value[0] + gains[0];
      for (Count b = 0; b <= budget; ++b) {
        const Count n = b / cost;
        if (n > best_n) {
          const double cand = prev_value[0] + gains[static_cast<std::size_t>(n)];
          if (cand > best) {
            best = cand;
            best_n = n;
          }
        }
        if (b >= b_first) {
          value[static_cast<std::size_t>(b)] = best;
          prefix[static_cast<std::size_t>(b)] = best_n;
        }
      }
    } else {
      for (Count b = b_first; b <= budget; ++b) {
        double best = 0.0;
        Count best_n = -1;
        std::size_t best_from = 0;
        for (Count n = 0; n * cost <= b; ++n) {
          const auto from = static_cast<std::size_t>(b - n * cost);
          const double cand = prev_value[from] + gains[static_cast<std::size_t>(n)];
          bool take = best_n < 0 || cand > best;
          if (!take && cand == best) {
            const std::span<const Count> pa(prev_prefix.data() + from * plen, plen);
            const std::span<const Count> pb(prev_prefix.data() + best_from * plen, plen);
            take = lex_less(pa, n, pb, best_n);
          }
          if (take) {
            best = cand;
            best_n = n;
            best_from = from;
          }
        }
        const auto ub = static_cast<std::size_t>(b);
        value[ub] = best;
        std::copy_n(prev_prefix.data() + best_from * plen, plen,
                    prefix.data() + ub * (plen + 1));
        prefix[ub * (plen + 1) + plen] = best_n;
      }
    }
    if (last) {
      const auto* full = prefix.data() + static_cast<std::size_t>(budget) * (plen + 1);
      for (Eigen::Index t = 0; t < k; ++t) result(t) = full[t];
    }
    prev_value.swap(value);
    prev_prefix.swap(prefix);
  }

  trim_absorbed(ts, prof, result);
  Allocation a = finish(ts, prof, std::move(result), "dp");
  a.notes = exclusion_notes(ts, prof);
  return a;
}

Allocation solve_greedy(const TaskSet& ts, const InformationProfile& prof) {
  require_compatible(ts, prof);
  const Eigen::Index k = ts.size();
  CountVector counts = CountVector::Zero(k);
  Count remaining = ts.budget;
  greedy_fill(ts, prof, counts, remaining);

  double current = objective(ts, prof, counts);
  for (Eigen::Index from = 0; from < k; ++from) {
    for (Eigen::Index to = 0; to < k; ++to) {
      if (from == to || counts(from) == 0) continue;
      const Count freed = remaining + ts.tasks[from].cost;
      const Count cost_to = ts.tasks[to].cost;
      const Count buy = std::min(
          freed / cost_to,
          positive_labels_left(prof.informativeness(to), prof.beta(to), counts(to),
                               freed / cost_to));
      if (buy == 0) continue;
      CountVector trial = counts;
      trial(from) -= 1;
      trial(to) += buy;
      const double value = objective(ts, prof, trial);
      if (value > current + 1e-12 * std::max(1.0, std::abs(current))) {
        counts = std::move(trial);
        current = value;
        remaining = freed - buy * cost_to;
      }
    }
  }
  greedy_fill(ts, prof, counts, remaining);

  trim_absorbed(ts, prof, counts);

  Allocation a = finish(ts, prof, std::move(counts), "greedy");
  a.notes = exclusion_notes(ts, prof);
  return a;
}

Allocation solve(const TaskSet& ts, const InformationProfile& prof, SolverChoice choice,
                 Count cell_limit) {
  switch (choice) {
    case SolverChoice::kDp:
      return solve_dp(ts, prof, cell_limit);
    case SolverChoice::kGreedy:
      return solve_greedy(ts, prof);
    case SolverChoice::kAuto:
      break;
  }
  require_valid(ts);
  if (dp_cell_updates(ts) <= cell_limit) return solve_dp(ts, prof, cell_limit);
  return solve_greedy(ts, prof);
}

double continuous_upper_bound(const TaskSet& ts, const InformationProfile& prof) {
  require_compatible(ts, prof);
  const Eigen::Index k = ts.size();

  // Labels of task i whose marginal per cost exceeds lambda.
  auto count_above = [&](Eigen::Index i, double lambda, Count cap) -> Count {
    const double info = prof.informativeness(i);
    const double beta = prof.beta(i);
    const double c = static_cast<double>(ts.tasks[i].cost);
    if (info <= 0.0 || info <= lambda * c) return 0;
    if (lambda <= 0.0 || beta == 1.0) return cap;
    if (beta == 0.0) return std::min<Count>(1, cap);
    const double x = std::log(lambda * c / info) / std::log(beta);
    if (!(x < static_cast<double>(cap))) return cap;
    return std::clamp<Count>(static_cast<Count>(std::ceil(x)), 0, cap);
  };

  auto dual = [&](double lambda) {
    double total = lambda * static_cast<double>(ts.budget);
    for (Eigen::Index i = 0; i < k; ++i) {
      const Count cap = ts.budget / ts.tasks[i].cost;
      const double c = static_cast<double>(ts.tasks[i].cost);
      const Count guess = count_above(i, lambda, cap);
      double best = -std::numeric_limits<double>::infinity();
      for (Count n = std::max<Count>(guess - 1, 0); n <= std::min(guess + 1, cap); ++n) {
        best = std::max(best, gather(prof.informativeness(i), prof.beta(i), n) -
                                  lambda * c * static_cast<double>(n));
      }
      total += best;
    }
    return total;
  };

  double hi = 0.0;
  for (Eigen::Index i = 0; i < k; ++i) {
    hi = std::max(hi, prof.informativeness(i) / static_cast<double>(ts.tasks[i].cost));
  }
  // The dual is convex in lambda; every evaluation is a valid bound.
  double lo = 0.0;
  double bound = std::min(dual(lo), dual(hi));
  for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, hi); ++it) {
    const double m1 = lo + (hi - lo) / 3.0;
    const double m2 = hi - (hi - lo) / 3.0;
    const double d1 = dual(m1);
    const double d2 = dual(m2);
    bound = std::min({bound, d1, d2});
    if (d1 <= d2) {
      hi = m2;
    } else {
      lo = m1;
    }
  }
  return bound;
}

Allocation baseline_equal_images(const TaskSet& ts, const InformationProfile& prof) {
  require_compatible(ts, prof);
  const Count per_task = ts.budget / ts.costs().sum();
  return finish(ts, prof, CountVector::Constant(ts.size(), per_task), "equal_images");
}

Allocation baseline_equal_budget(const TaskSet& ts, const InformationProfile& prof) {
  require_compatible(ts, prof);
  // floor((B / K) / c_i) == floor(B / (K c_i)) for positive integers.
  CountVector counts(ts.size());
  for (Eigen::Index i = 0; i < ts.size(); ++i) {
    counts(i) = ts.budget / (ts.size() * ts.tasks[i].cost);
  }
  return finish(ts, prof, std::move(counts), "equal_budget");
}

Allocation baseline_single_task(const TaskSet& ts, const InformationProfile& prof,
                                Eigen::Index task) {
  require_compatible(ts, prof);
  if (task < 0 || task >= ts.size()) {
    throw DomainError("single-task baseline index " + std::to_string(task) + " out of range");
  }
  CountVector counts = CountVector::Zero(ts.size());
  counts(task) = ts.budget / ts.tasks[task].cost;
  return finish(ts, prof, std::move(counts), "single_task:" + ts.tasks[task].id);
}

Allocation baseline_same_images(const TaskSet& ts, const InformationProfile& prof) {
  Allocation a = baseline_equal_images(ts, prof);
  a.solver = "same_images";
  a.same_images = true;
  a.notes.push_back("all tasks label one shared image set; scored like equal_images");
  return a;
}

SolverChoice parse_solver_choice(const std::string& name) {
  if (name == "auto") return SolverChoice::kAuto;
  if (name == "dp") return SolverChoice::kDp;
  if (name == "greedy") return SolverChoice::kGreedy;
  throw DomainError("unknown solver '" + name + "' (expected auto, dp or greedy)");
}

}  // namespace taba
