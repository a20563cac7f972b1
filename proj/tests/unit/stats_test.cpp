// Copyright 2026 The Sunflower Pathfinding Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sunflower/stats.hpp"

#include <cmath>

#include <gtest/gtest.h>

namespace sunflower {
namespace {

TEST(Stats, WilsonInterval) {
  const Interval i = wilson_interval(80, 100);
  EXPECT_DOUBLE_EQ(i.rate, 0.8);
  EXPECT_NEAR(i.low, 0.7112, 1e-4);
  EXPECT_NEAR(i.high, 0.8666, 1e-4);
  const Interval zero = wilson_interval(0, 500);
  EXPECT_EQ(zero.low, 0.0);
  EXPECT_GT(zero.high, 0.0);
  const Interval none = wilson_interval(0, 0);
  EXPECT_EQ(none.rate, 0.0);
}

TEST(Stats, Fits) {
  const LinearFit f = linear_fit({1, 2, 3, 4}, {3, 5, 7, 9});
  EXPECT_NEAR(f.slope, 2.0, 1e-14);
  EXPECT_NEAR(f.intercept, 1.0, 1e-14);
  EXPECT_NEAR(f.r2, 1.0, 1e-14);
  std::vector<double> x{8, 12, 16, 20}, y;
  for (double v : x) y.push_back(3.0 * std::pow(v, 4.5));
  const LinearFit g = loglog_fit(x, y);
  EXPECT_NEAR(g.slope, 4.5, 1e-12);
  EXPECT_NEAR(g.r2, 1.0, 1e-12);
}

}  // namespace
}  // namespace sunflower
