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

#include <span>

#include "taba/core.hpp"

namespace taba {

// Signed relative change of a task score in percent, positive when the task
// improved: (-1)^lower * (after - before) / before * 100.
double relative_gain(const ScorePair& p, bool lower_is_better);

// Unweighted mean of per-task gains.
double overall_gain(std::span<const double> gains);

}  // namespace taba
