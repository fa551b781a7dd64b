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

// Least-absolute-deviation fit of the reduction rate from a learning curve.
//
// Model: gain(N) = ds * (1 - beta^N) / (1 - beta). For fixed beta the model
// is linear in ds with features f_N, so the L1-optimal ds is the weighted
// median of gain_N / f_N with weights f_N. The outer problem over beta is a
// dense grid on [0, 1] followed by golden-section refinement inside the
// bracket around the best grid point.

#include <Eigen/Dense>

#include <span>
#include <vector>

#include "taba/core.hpp"

namespace taba {

struct BetaFitOptions {
  int grid_points = 2000;
  int max_refine_iterations = 200;
  double refine_tolerance = 1e-15;
  bool record_trace = false;
};

struct FitCandidate {
  double beta = 0.0;
  double ds = 0.0;
  double residual = 0.0;
};

struct BetaFit {
  double beta = 0.0;
  double ds = 0.0;
  double residual = 0.0;  // achieved sum of absolute errors
  // Every candidate the search evaluated, in evaluation order; filled only
  // when BetaFitOptions::record_trace is set.
  std::vector<FitCandidate> trace;
};

Eigen::VectorXd predict_curve(double beta, double ds, std::span<const Count> counts);

// Smallest value whose cumulative weight reaches half of the total, so an
// exact split resolves to the lower of the two minimizers. Weights must be
// positive.
double weighted_median(std::span<const double> values, std::span<const double> weights);

// Best ds and its residual for a fixed beta.
FitCandidate fit_gain_at(const LearningCurve& curve, double beta);

BetaFit fit_reduction_rate(const LearningCurve& curve, const BetaFitOptions& options = {});

}  // namespace taba
