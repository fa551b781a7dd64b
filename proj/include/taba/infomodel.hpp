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

// Geometric diminishing-returns model: the k-th label of a task carries
// beta^(k-1) of the first label's information, so N labels gather
// I * (1 - beta^N) / (1 - beta), with the limit N * I at beta = 1.

#include <Eigen/Dense>

#include <cmath>
#include <string>

#include "taba/core.hpp"
#include "taba/errors.hpp"

namespace taba {

// Below this distance from 1 the series is evaluated as its linear limit.
inline constexpr double kLinearLimitThreshold = 1e-12;

namespace detail {

template <typename Scalar>
void check_gather_domain(Scalar informativeness, Scalar beta, Count n) {
  using std::isfinite;
  if (!(beta >= Scalar(0) && beta <= Scalar(1))) {
    throw DomainError("reduction rate must lie in [0, 1]");
  }
  if (!isfinite(informativeness)) throw DomainError("informativeness must be finite");
  if (n < 0) throw DomainError("label count must be non-negative");
}

}  // namespace detail

// beta^n evaluated as exp(n ln beta); 0^0 = 1.
template <typename Scalar>
Scalar decay(Scalar beta, Count n) {
  using std::exp;
  using std::log;
  if (n == 0) return Scalar(1);
  if (beta == Scalar(0)) return Scalar(0);
  if (beta == Scalar(1)) return Scalar(1);
  return exp(Scalar(n) * log(beta));
}

// Sum_{k=1..n} beta^(k-1), without the informativeness factor.
template <typename Scalar>
Scalar geometric_weight(Scalar beta, Count n) {
  using std::expm1;
  using std::log;
  if (!(beta >= Scalar(0) && beta <= Scalar(1))) {
    throw DomainError("reduction rate must lie in [0, 1]");
  }
  if (n < 0) throw DomainError("label count must be non-negative");
  if (n == 0) return Scalar(0);
  const Scalar gap = Scalar(1) - beta;
  if (gap < Scalar(kLinearLimitThreshold)) return Scalar(n);
  if (beta == Scalar(0)) return Scalar(1);
  // 1 - beta^n = -expm1(n ln beta) keeps precision when beta^n is near 1.
  return -expm1(Scalar(n) * log(beta)) / gap;
}

// Total information of n labels with first-label informativeness I.
template <typename Scalar>
Scalar gather(Scalar informativeness, Scalar beta, Count n) {
  detail::check_gather_domain(informativeness, beta, n);
  return geometric_weight(beta, n) * informativeness;
}

// Information added by label n + 1, i.e. beta^n * I.
template <typename Scalar>
Scalar marginal(Scalar informativeness, Scalar beta, Count n) {
  detail::check_gather_domain(informativeness, beta, n);
  return decay(beta, n) * informativeness;
}

// I_i = sum_j I_{i->j}: self part (the unit diagonal) plus everything a
// task-i label transfers to the other tasks.
inline Eigen::VectorXd aggregate_informativeness(const TransferMatrix& m) {
  return m.values().rowwise().sum();
}

}  // namespace taba
