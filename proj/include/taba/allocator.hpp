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

// Budget-constrained maximization of total gathered information
//
//   maximize  sum_i gather(I_i, beta_i, N_i)   s.t.  sum_i c_i N_i <= B,
//
// solved exactly by dynamic programming or approximately by greedy marginal
// selection, plus the heuristic baselines it is compared against.

#include <Eigen/Dense>

#include <string>

#include "taba/core.hpp"

namespace taba {

inline constexpr Count kDefaultDpCellLimit = 10'000'000;

enum class SolverChoice { kAuto, kDp, kGreedy };

// Sum of gather over tasks, accumulated in task order. No feasibility check.
double objective(const TaskSet& ts, const InformationProfile& prof, const CountVector& counts);

// Inner-loop updates solve_dp performs on this instance: B + 1 for the first
// task, sum_b (floor(b / c_i) + 1) for each middle task and
// floor(B / c_last) + 1 for the last. Saturates at INT64_MAX.
Count dp_cell_updates(const TaskSet& ts);

// Exact solve. Label k of task i costs c_i and is worth beta_i^(k-1) I_i; the
// values decrease in k, so an optimal multiset is a per-task prefix and a
// task-by-task bounded knapsack over budgets 0..B is exact. Among optimal
// count vectors the lexicographically smallest is returned. Throws
// DpTooLargeError when dp_cell_updates exceeds cell_limit.
Allocation solve_dp(const TaskSet& ts, const InformationProfile& prof,
                    Count cell_limit = kDefaultDpCellLimit);

// Buys the affordable label with the best marginal-per-cost ratio until
// nothing affordable has a positive marginal, then makes one pass of
// pairwise swaps (one label of a traded for as many labels of b as the freed
// budget buys, kept on strict improvement) and spends any leftover greedily.
// Ties go to the lower task index.
Allocation solve_greedy(const TaskSet& ts, const InformationProfile& prof);

// Dispatches on choice; kAuto picks DP when dp_cell_updates <= cell_limit.
Allocation solve(const TaskSet& ts, const InformationProfile& prof, SolverChoice choice,
                 Count cell_limit = kDefaultDpCellLimit);

// Lagrangian dual bound for the relaxation that interpolates each task's
// gather sequence linearly between integers. Any allocation's objective is
// at most this value.
double continuous_upper_bound(const TaskSet& ts, const InformationProfile& prof);

// Baselines. The profile is only used to score the allocation.
Allocation baseline_equal_images(const TaskSet& ts, const InformationProfile& prof);
Allocation baseline_equal_budget(const TaskSet& ts, const InformationProfile& prof);
Allocation baseline_single_task(const TaskSet& ts, const InformationProfile& prof,
                                Eigen::Index task);
Allocation baseline_same_images(const TaskSet& ts, const InformationProfile& prof);

SolverChoice parse_solver_choice(const std::string& name);

}  // namespace taba
