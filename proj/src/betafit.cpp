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

#include "taba/betafit.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "taba/errors.hpp"
#include "taba/infomodel.hpp"

namespace taba {

Eigen::VectorXd predict_curve(double beta, double ds, std::span<const Count> counts) {
  if (!(beta >= 0.0 && beta <= 1.0)) throw DomainError("reduction rate must lie in [0, 1]");
  Eigen::VectorXd out(static_cast<Eigen::Index>(counts.size()));
  for (std::size_t i = 0; i < counts.size(); ++i) {
    out(static_cast<Eigen::Index>(i)) = geometric_weight(beta, counts[i]) * ds;
  }
  return out;
}

double weighted_median(std::span<const double> values, std::span<const double> weights) {
  if (values.empty() || values.size() != weights.size()) {
    throw DomainError("weighted median needs equally sized, non-empty inputs");
  }
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  double total = 0.0;
  for (double w : weights) total += w;
  double cumulative = 0.0;
  for (std::size_t idx : order) {
    cumulative += weights[idx];
    if (2.0 * cumulative >= total) return values[idx];
  }
  return values[order.back()];
}

FitCandidate fit_gain_at(const LearningCurve& curve, double beta) {
  const std::size_t n = curve.points.size();
  std::vector<double> ratios(n);
  std::vector<double> features(n);
  for (std::size_t i = 0; i < n; ++i) {
    features[i] = geometric_weight(beta, curve.points[i].n);
    ratios[i] = curve.points[i].gain / features[i];
  }
  FitCandidate c;
  c.beta = beta;
  c.ds = weighted_median(ratios, features);
  for (std::size_t i = 0; i < n; ++i) {
    c.residual += std::abs(curve.points[i].gain - c.ds * features[i]);
  }
  return c;
}

BetaFit fit_reduction_rate(const LearningCurve& curve, const BetaFitOptions& options) {
  if (curve.points.size() < 2) {
    throw InsufficientDataError("learning curve '" + curve.task +
                                "' needs at least 2 points to fit");
  }
  require_valid(curve);
  if (options.grid_points < 3) throw DomainError("beta grid needs at least 3 points");

  BetaFit result;
  bool have_best = false;
  FitCandidate best;
  auto evaluate = [&](double beta) {
    FitCandidate c = fit_gain_at(curve, beta);
    if (options.record_trace) result.trace.push_back(c);
    if (!have_best || c.residual < best.residual) {
      best = c;
      have_best = true;
    }
    return c.residual;
  };

  const int last = options.grid_points - 1;
  int best_cell = 0;
  double best_grid = 0.0;
  for (int k = 0; k <= last; ++k) {
    const double beta = k == last ? 1.0 : static_cast<double>(k) / last;
    const double r = evaluate(beta);
    if (k == 0 || r < best_grid) {
      best_grid = r;
      best_cell = k;
    }
  }

  // Golden-section search over the two grid cells adjacent to the best point.
  double lo = static_cast<double>(std::max(best_cell - 1, 0)) / last;
  double hi = best_cell + 1 >= last ? 1.0 : static_cast<double>(best_cell + 1) / last;
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = evaluate(x1);
  double f2 = evaluate(x2);
  for (int it = 0; it < options.max_refine_iterations && hi - lo > options.refine_tolerance;
       ++it) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = evaluate(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = evaluate(x2);
    }
  }

  result.beta = best.beta;
  result.ds = best.ds;
  result.residual = best.residual;
  return result;
}

}  // namespace taba
