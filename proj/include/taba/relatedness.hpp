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

#include <optional>
#include <span>

#include "taba/core.hpp"

namespace taba {

// Denominators closer to zero than this mark a probe as carrying no signal.
inline constexpr double kProbeDenominatorEpsilon = 1e-8;

// Per-step transferred informativeness
//   (S_joint - S_base) / (S_self_pair - S_base),
// or nullopt when |S_self_pair - S_base| < kProbeDenominatorEpsilon.
std::optional<double> step_transfer(const ProbeRecord& r);

// Averages the usable step values of every ordered pair (i, j), i != j.
// Values are summed in sorted order so the result does not depend on the
// order of records in the log. Throws IncompleteLogError naming the first
// pair (row-major) left without usable records.
TransferMatrix estimate_transfer(std::span<const ProbeRecord> log, Eigen::Index k);

}  // namespace taba
