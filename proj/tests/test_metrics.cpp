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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "taba/errors.hpp"
#include "taba/metrics.hpp"

namespace taba {
namespace {

TEST(RelativeGain, Examples) {
  EXPECT_NEAR(relative_gain({0.5, 0.55}, false), 10.0, 1e-12);
  EXPECT_NEAR(relative_gain({1.0, 0.9}, true), 10.0, 1e-12);
  EXPECT_EQ(relative_gain({0.5, 0.5}, false), 0.0);
  EXPECT_EQ(relative_gain({0.5, 0.5}, true), 0.0);
}

TEST(RelativeGain, ZeroBaselineIsDegenerate) {
  EXPECT_THROW(relative_gain({0.0, 0.3}, false), DegenerateBaselineError);
}

TEST(RelativeGain, OrientationFlipsSign) {
  std::mt19937_64 gen(2);
  std::uniform_real_distribution<double> u(0.1, 3.0);
  for (int t = 0; t < 1000; ++t) {
    const ScorePair p{u(gen), u(gen)};
    EXPECT_EQ(relative_gain(p, true), -relative_gain(p, false));
  }
}

TEST(RelativeGain, ScaleInvariant) {
  std::mt19937_64 gen(4);
  std::uniform_real_distribution<double> u(0.1, 3.0);
  for (int t = 0; t < 1000; ++t) {
    const ScorePair p{u(gen), u(gen)};
    const double k = u(gen);
    EXPECT_NEAR(relative_gain({p.before * k, p.after * k}, false), relative_gain(p, false),
                1e-10 * std::max(1.0, std::abs(relative_gain(p, false))));
  }
}

TEST(OverallGain, Examples) {
  EXPECT_EQ(overall_gain(std::vector<double>{10, 20}), 15.0);
  EXPECT_EQ(overall_gain(std::vector<double>{7}), 7.0);
  EXPECT_EQ(overall_gain(std::vector<double>{10, -10}), 0.0);
  EXPECT_THROW(overall_gain(std::vector<double>{}), DomainError);
}

TEST(OverallGain, PermutationInvariant) {
  std::mt19937_64 gen(6);
  std::uniform_real_distribution<double> u(-50.0, 50.0);
  std::vector<double> gains(9);
  for (auto& g : gains) g = u(gen);
  const double ref = overall_gain(gains);
  for (int t = 0; t < 100; ++t) {
    std::shuffle(gains.begin(), gains.end(), gen);
    EXPECT_EQ(overall_gain(gains), ref);
  }
}

}  // namespace
}  // namespace taba
