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

#include "sunflower/params.hpp"

#include <algorithm>

#include <gtest/gtest.h>

namespace sunflower {
namespace {

bool has(const std::vector<ParamViolation>& v, ParamViolation x) { return std::find(v.begin(), v.end(), x) != v.end(); }

TEST(Params, FigureInstanceIsValid) {
  const GraphParams p = validate_params({3, 5, 8, 0, 0});
  EXPECT_EQ(p.graph_vertex_count(), 128u);
  EXPECT_EQ(p.leaves_per_tree(), 8u);
  EXPECT_EQ(p.label_bits(), 7);
  EXPECT_EQ(p.matchings_per_pair(), 1);
}

TEST(Params, RejectsEvenDegree) {
  try {
    validate_params({4, 5, 8, 0, 0});
    FAIL();
  } catch (const InvalidParamsError& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidParams);
    EXPECT_EQ(e.violations(), std::vector<ParamViolation>{ParamViolation::EvenDegree});
  }
}

TEST(Params, RejectsTreeCountNotMultipleOf4) {
  EXPECT_EQ(check_params({3, 5, 6, 0, 0}), std::vector<ParamViolation>{ParamViolation::TreeCountNotMultipleOf4});
}

TEST(Params, ListsEveryViolation) {
  const auto v = check_params({2, 2, 2, -1, 0});
  EXPECT_TRUE(has(v, ParamViolation::DegreeTooSmall));
  EXPECT_TRUE(has(v, ParamViolation::EvenDegree));
  EXPECT_TRUE(has(v, ParamViolation::HeightTooSmall));
  EXPECT_TRUE(has(v, ParamViolation::EvenHeight));
  EXPECT_TRUE(has(v, ParamViolation::TreeCountTooSmall));
  EXPECT_TRUE(has(v, ParamViolation::TreeCountNotMultipleOf4));
  EXPECT_TRUE(has(v, ParamViolation::NegativeAuxCount));
}

TEST(Params, RejectsEvenHeight) { EXPECT_TRUE(has(check_params({3, 4, 8, 0, 0}), ParamViolation::EvenHeight)); }

TEST(Params, RejectsOversizedInstance) {
  EXPECT_TRUE(has(check_params({7, 41, 8, 0, 0}), ParamViolation::InstanceTooLarge));
  EXPECT_TRUE(has(check_params({3, 5, 8, std::int64_t{1} << 62, 0}), ParamViolation::InstanceTooLarge));
}

TEST(Params, LayerSizesTileTheTree) {
  for (int d : {3, 5, 7}) {
    for (int m : {3, 5, 7}) {
      const GraphParams p = validate_params({d, m, 4, 0, 0});
      std::uint64_t total = 0;
      for (int j = 1; j <= m; ++j) {
        EXPECT_EQ(p.layer_offset(j), total);
        total += p.layer_size(j);
      }
      EXPECT_EQ(total, p.vertices_per_tree());
      EXPECT_EQ(p.layer_size(1), 1u);
      if (m >= 3) EXPECT_EQ(p.layer_size(3), static_cast<std::uint64_t>((d - 2) * (d - 1)));
    }
  }
}

TEST(Params, LabelBitsCoverPadding) {
  GraphParams p = validate_params({3, 5, 8, 128, 0});
  EXPECT_EQ(p.label_bits(), 8);
  p = validate_params({3, 5, 8, 129, 0});
  EXPECT_EQ(p.label_bits(), 9);
}

TEST(Params, WarnsBelowDegreeSeven) {
  EXPECT_EQ(param_warnings(validate_params({3, 5, 8, 0, 0})).size(), 1u);
  EXPECT_TRUE(param_warnings(validate_params({7, 3, 4, 0, 0})).empty());
}

}  // namespace
}  // namespace sunflower
