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

#include "taba/simulator.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "taba/errors.hpp"
#include "taba/infomodel.hpp"
#include "taba/metrics.hpp"

namespace taba {
namespace {

double standard_normal(std::mt19937_64& gen) {
  constexpr double kScale = 0x1.0p-53;
  const double u1 = static_cast<double>(gen() >> 11) * kScale;
  const double u2 = static_cast<double>(gen() >> 11) * kScale;
  return std::sqrt(-2.0 * std::log(1.0 - u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

StrategyRow score_row(const SimWorld& world, std::string name, Allocation allocation,
                      std::uint64_t stream) {
  StrategyRow row;
  row.strategy = std::move(name);
  row.scores = simulate_scores(world, allocation.counts, stream);
  const Eigen::Index k = world.task_set.size();
  row.task_gain.resize(k);
  for (Eigen::Index j = 0; j < k; ++j) {
    row.task_gain(j) = relative_gain(row.scores[static_cast<std::size_t>(j)],
                                     world.task_set.tasks[j].lower_is_better);
  }
  row.overall_gain = overall_gain({row.task_gain.data(), static_cast<std::size_t>(k)});
  row.allocation = std::move(allocation);
  return row;
}

}  // namespace

void require_valid(const SimWorld& world) {
  require_valid(world.task_set);
  const Eigen::Index k = world.task_set.size();
  if (world.true_transfer.size() != k || world.true_beta.size() != k ||
      world.base_scores.size() != k || world.gain_scale.size() != k) {
    throw DomainError("world parameter lengths must all equal the task count");
  }
  for (Eigen::Index i = 0; i < k; ++i) {
    if (!(world.true_beta(i) >= 0.0 && world.true_beta(i) <= 1.0)) {
      throw DomainError("world beta outside [0, 1]");
    }
    if (!(world.base_scores(i) > 0.0) || !std::isfinite(world.base_scores(i))) {
      throw DomainError("world base scores must be positive");
    }
    if (!(world.gain_scale(i) > 0.0) || !std::isfinite(world.gain_scale(i))) {
      throw DomainError("world gain scales must be positive");
    }
  }
  if (!(world.noise_std >= 0.0) || !std::isfinite(world.noise_std)) {
    throw DomainError("world noise_std must be non-negative");
  }
}

InformationProfile true_profile(const SimWorld& world) {
  return {aggregate_informativeness(world.true_transfer), world.true_beta};
}

std::vector<ScorePair> simulate_scores(const SimWorld& world, const CountVector& counts,
                                       std::uint64_t stream_offset) {
  require_valid(world);
  const Eigen::Index k = world.task_set.size();
  if (counts.size() != k) throw DomainError("count vector length mismatch");
  if ((counts.array() < 0).any()) throw DomainError("label counts must be non-negative");
  if (spend(world.task_set, counts) > world.task_set.budget) {
    throw DomainError("allocation overspends the world budget");
  }

  Eigen::VectorXd weight(k);
  for (Eigen::Index i = 0; i < k; ++i) weight(i) = geometric_weight(world.true_beta(i), counts(i));

  std::mt19937_64 gen(world.seed + stream_offset);
  std::vector<ScorePair> out(static_cast<std::size_t>(k));
  for (Eigen::Index j = 0; j < k; ++j) {
    double received = 0.0;
    for (Eigen::Index i = 0; i < k; ++i) received += world.true_transfer(i, j) * weight(i);
    const double gain = world.gain_scale(j) * received;
    const double direction = world.task_set.tasks[j].lower_is_better ? -1.0 : 1.0;
    double after = world.base_scores(j) + direction * gain;
    if (world.noise_std > 0.0) after += world.noise_std * standard_normal(gen);
    out[static_cast<std::size_t>(j)] = {world.base_scores(j), after};
  }
  return out;
}

std::vector<SweepPoint> sweep_two_task_split(const SimWorld& world, int steps,
                                             std::uint64_t stream_offset) {
  require_valid(world);
  if (world.task_set.size() != 2) {
    throw DomainError("budget-split sweep needs exactly two tasks");
  }
  if (steps < 2) throw DomainError("budget-split sweep needs at least two steps");
  const __int128 budget = world.task_set.budget;
  const __int128 denom = steps - 1;
  const __int128 c0 = world.task_set.tasks[0].cost;
  const __int128 c1 = world.task_set.tasks[1].cost;

  std::vector<SweepPoint> points;
  points.reserve(static_cast<std::size_t>(steps));
  for (int s = 0; s < steps; ++s) {
    SweepPoint p;
    p.split_fraction = static_cast<double>(s) / static_cast<double>(steps - 1);
    p.counts.resize(2);
    p.counts(0) = static_cast<Count>(s * budget / (denom * c0));
    p.counts(1) = static_cast<Count>((denom - s) * budget / (denom * c1));
    const auto row = score_row(world, "sweep", Allocation{p.counts, 0, 0.0, "sweep", false, {}},
                               stream_offset + static_cast<std::uint64_t>(s));
    p.overall_gain = row.overall_gain;
    points.push_back(std::move(p));
  }
  return points;
}

StrategyReport compare_strategies(const SimWorld& world, const InformationProfile& prof,
                                  const CompareOptions& options) {
  require_valid(world);
  const TaskSet& ts = world.task_set;
  require_compatible(ts, prof);

  std::vector<std::pair<std::string, Allocation>> plans;
  plans.emplace_back("taba", solve(ts, prof, options.solver, options.dp_cell_limit));
  plans.emplace_back("equal_images", baseline_equal_images(ts, prof));
  plans.emplace_back("same_images", baseline_same_images(ts, prof));
  plans.emplace_back("equal_budget", baseline_equal_budget(ts, prof));
  for (Eigen::Index i = 0; i < ts.size(); ++i) {
    plans.emplace_back("single_task:" + ts.tasks[i].id, baseline_single_task(ts, prof, i));
  }

  StrategyReport report;
  for (std::size_t r = 0; r < plans.size(); ++r) {
    report.rows.push_back(score_row(world, plans[r].first, std::move(plans[r].second), r));
  }
  if (options.sweep_steps > 0) {
    report.sweep = sweep_two_task_split(world, options.sweep_steps, plans.size());
  }
  return report;
}

}  // namespace taba
