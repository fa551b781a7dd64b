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

#pragma once

// Synthetic multi-task world used in place of network training. A task-j
// score moves by
//
//   gain_scale_j * sum_i T(i, j) * (1 - beta_i^N_i) / (1 - beta_i)
//
// in its improving direction (down for lower-is-better metrics), plus
// optional Gaussian noise. With gain_scale_j proportional to base_score_j
// the mean relative gain is proportional to the allocator's objective under
// the world's own profile.
//
// Noise stream: std::mt19937_64 seeded with seed + stream offset; one
// standard normal per task in task order via Box-Muller on two 53-bit
// uniforms u1, u2 = (draw >> 11) * 2^-53 as sqrt(-2 ln(1 - u1)) cos(2 pi u2).

#include <Eigen/Dense>

#include <cstdint>
#include <string>
#include <vector>

#include "taba/allocator.hpp"
#include "taba/core.hpp"

namespace taba {

struct SimWorld {
  TaskSet task_set;
  TransferMatrix true_transfer;
  Eigen::VectorXd true_beta;
  Eigen::VectorXd base_scores;  // seed-set scores S'
  Eigen::VectorXd gain_scale;   // score units per unit of received information
  double noise_std = 0.0;
  std::uint64_t seed = 0;
};

void require_valid(const SimWorld& world);

// Row sums of the true transfer matrix with the true reduction rates.
InformationProfile true_profile(const SimWorld& world);

// One pair (before = S'_j, after = S_j) per task. Throws DomainError when the
// counts overspend the world's budget.
std::vector<ScorePair> simulate_scores(const SimWorld& world, const CountVector& counts,
                                       std::uint64_t stream_offset = 0);

struct StrategyRow {
  std::string strategy;
  Allocation allocation;
  std::vector<ScorePair> scores;
  Eigen::VectorXd task_gain;  // percent
  double overall_gain = 0.0;  // percent
};

struct SweepPoint {
  double split_fraction = 0.0;  // share of the budget given to task 0
  CountVector counts;
  double overall_gain = 0.0;
};

struct StrategyReport {
  std::vector<StrategyRow> rows;
  std::vector<SweepPoint> sweep;
};

struct CompareOptions {
  SolverChoice solver = SolverChoice::kAuto;
  Count dp_cell_limit = kDefaultDpCellLimit;
  int sweep_steps = 0;  // 0 disables the two-task budget sweep
};

// Scores the allocator's plan and every baseline. Row order: taba,
// equal_images, same_images, equal_budget, then single_task:<id> per task.
// Row r draws noise from stream offset r; sweep point s from rows + s.
StrategyReport compare_strategies(const SimWorld& world, const InformationProfile& prof,
                                  const CompareOptions& options = {});

// Mean relative gain for each of `steps` evenly spaced splits of a two-task
// budget; split s gives floor(s B / ((steps - 1) c_0)) labels to task 0 and
// the rest of the budget to task 1. Throws DomainError unless K == 2.
std::vector<SweepPoint> sweep_two_task_split(const SimWorld& world, int steps,
                                             std::uint64_t stream_offset = 0);

}  // namespace taba
