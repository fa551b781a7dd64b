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

#include "taba/metrics.hpp"

#include <algorithm>
#include <vector>

#include "taba/errors.hpp"

namespace taba {

double relative_gain(const ScorePair& p, bool lower_is_better) {
  if (p.before == 0.0) {
    throw DegenerateBaselineError("relative gain undefined for a zero baseline score");
  }
  const double ratio = (p.after - p.before) / p.before;
  return (lower_is_better ? -ratio : ratio) * 100.0;
}

double overall_gain(std::span<const double> gains) {
  if (gains.empty()) throw DomainError("overall gain of an empty task list");
  // Summed in sorted order so permutations of the input agree bit for bit.
  std::vector<double> sorted(gains.begin(), gains.end());
  std::sort(sorted.begin(), sorted.end());
  double sum = 0.0;
  for (double g : sorted) sum += g;
  return sum / static_cast<double>(gains.size());
}

}  // namespace taba
