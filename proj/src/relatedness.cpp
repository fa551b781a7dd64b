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

#include "taba/relatedness.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "taba/errors.hpp"

namespace taba {

std::optional<double> step_transfer(const ProbeRecord& r) {
  require_valid(r);
  const double denominator = r.score_self_pair - r.score_base;
  if (std::abs(denominator) < kProbeDenominatorEpsilon) return std::nullopt;
  return (r.score_joint - r.score_base) / denominator;
}

TransferMatrix estimate_transfer(std::span<const ProbeRecord> log, Eigen::Index k) {
  if (k < 1) throw DomainError("task count must be >= 1");
  std::vector<std::vector<double>> samples(static_cast<std::size_t>(k * k));
  for (const auto& r : log) {
    if (r.source >= k || r.target >= k) {
      throw DomainError("probe record references task index outside [0, " +
                        std::to_string(k) + ")");
    }
    if (auto value = step_transfer(r)) {
      samples[static_cast<std::size_t>(r.source * k + r.target)].push_back(*value);
    }
  }

  Eigen::MatrixXd values = Eigen::MatrixXd::Identity(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = 0; j < k; ++j) {
      if (i == j) continue;
      auto& pair = samples[static_cast<std::size_t>(i * k + j)];
      if (pair.empty()) throw IncompleteLogError(i, j);
      std::sort(pair.begin(), pair.end());
      double sum = 0.0;
      for (double v : pair) sum += v;
      values(i, j) = sum / static_cast<double>(pair.size());
    }
  }
  return TransferMatrix(std::move(values));
}

}  // namespace taba
