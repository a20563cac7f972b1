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

#include "sunflower/expansion.hpp"

#include <cmath>
#include <numeric>

#include <gtest/gtest.h>

#include "sunflower/errors.hpp"

namespace sunflower {
namespace {

GraphParams P(int d, int m, int n, std::uint64_t seed = 1) { return validate_params({d, m, n, 0, seed}); }

TEST(Expansion, TopEigenvalueIsDegree) {
  for (auto p : {P(3, 5, 8), P(5, 3, 8)}) {
    const SunflowerGraph g(p, Backend::Explicit);
    const GapResult r = adjacency_gap(g);
    EXPECT_EQ(r.method, "dense");
    EXPECT_NEAR(r.lambda1, p.d, 1e-8);
    EXPECT_LE(r.lambda1_residual, 1e-12);
    EXPECT_GE(r.gap, 0.0);
    const double lv = std::log2(static_cast<double>(p.graph_vertex_count()));
    EXPECT_NEAR(r.normalized, r.gap * lv * lv * lv, 1e-12);
  }
}

TEST(Expansion, LanczosMatchesDense) {
  for (auto p : {P(3, 5, 8), P(5, 3, 8), P(3, 7, 4)}) {
    const SunflowerGraph g(p, Backend::Explicit);
    const GapResult a = adjacency_gap(g, GapMethod::Dense), b = adjacency_gap(g, GapMethod::Lanczos);
    EXPECT_EQ(b.method, "lanczos");
    EXPECT_NEAR(a.lambda2, b.lambda2, 1e-6 * p.d);
  }
}

TEST(Expansion, GapRequiresExplicitBackend) {
  const SunflowerGraph g(P(3, 5, 8), Backend::Implicit);
  EXPECT_THROW(adjacency_gap(g), Error);
}

TEST(Expansion, SingleVertexAndTreeRatios) {
  const GraphParams p = P(5, 5, 8);
  const SunflowerGraph g(p, Backend::Explicit);
  EXPECT_EQ(subset_expansion_ratio(g, {0}), 5.0);
  std::vector<std::uint64_t> tree(p.vertices_per_tree());
  std::iota(tree.begin(), tree.end(), std::uint64_t{p.vertices_per_tree()});
  const double L = static_cast<double>(p.leaves_per_tree());
  EXPECT_NEAR(tree_expansion_ratio(p), (2 + 2 * L) / std::pow(4.0, 4), 1e-15);
  EXPECT_NEAR(subset_expansion_ratio(g, tree), tree_expansion_ratio(p), 1e-15);
}

TEST(Expansion, SampledRatiosArePositive) {
  const SunflowerGraph g(P(3, 5, 8), Backend::Explicit);
  const ExpansionSample s = vertex_expansion_sample(g, 300, {1, 4, 16, 64}, 2);
  ASSERT_EQ(s.sizes.size(), 4u);
  EXPECT_EQ(s.min_ratio[0], 3.0);
  EXPECT_GT(s.overall_min, 0.0);
  std::uint64_t total = 0;
  for (auto c : s.samples_per_size) total += c;
  EXPECT_EQ(total, 300u);
  const ExpansionSample again = vertex_expansion_sample(g, 300, {1, 4, 16, 64}, 2);
  EXPECT_EQ(s.min_ratio, again.min_ratio);
}

TEST(Expansion, ExpanderInstanceHasGap) {
  const SunflowerGraph g(P(7, 5, 8), Backend::Explicit);
  const GapResult r = adjacency_gap(g);
  EXPECT_EQ(r.method, "lanczos");
  EXPECT_NEAR(r.lambda1, 7.0, 1e-8);
  EXPECT_GT(r.gap, 0.0);
}

TEST(Expansion, CompleteBipartitePasses) {
  for (int N : {8, 12}) {
    BipartiteGraph b{N, N, {}};
    for (int k = 0; k < N; ++k) {
      std::vector<int> m(N);
      for (int l = 0; l < N; ++l) m[l] = (l + k) % N;
      b.matchings.push_back(m);
    }
    for (auto mask : b.left_masks()) EXPECT_EQ(mask, (std::uint64_t{1} << N) - 1);
    Rng rng(1);
    const BipartiteVerdict v = check_bipartite(b, CheckMode::Exhaustive, rng);
    EXPECT_TRUE(v.cond_i);
    EXPECT_TRUE(v.cond_ii);
    EXPECT_EQ(v.cond_ii_exhaustive, 2 * N <= 22);
  }
}

TEST(Expansion, SingleMatchingFails) {
  Rng rng(4);
  const BipartiteGraph b = random_bipartite(8, 1, rng);
  EXPECT_FALSE(check_bipartite(b, CheckMode::Exhaustive, rng).cond_i);
  EXPECT_FALSE(check_bipartite(b, CheckMode::MonteCarlo, rng).cond_i);
}

TEST(Expansion, MonteCarloNeverContradictsExhaustive) {
  Rng rng(6);
  int disagreements = 0;
  for (int draw = 0; draw < 60; ++draw) {
    const BipartiteGraph b = random_bipartite(10, 3, rng);
    const BipartiteVerdict ex = check_bipartite(b, CheckMode::Exhaustive, rng);
    const BipartiteVerdict mc = check_bipartite(b, CheckMode::MonteCarlo, rng);
    // Sampling can miss a bad subset but can never invent one.
    if (!mc.cond_i) EXPECT_FALSE(ex.cond_i);
    if (!mc.cond_ii) EXPECT_FALSE(ex.cond_ii);
    disagreements += (mc.cond_i != ex.cond_i) + (mc.cond_ii != ex.cond_ii);
  }
  EXPECT_EQ(disagreements, 0);
}

TEST(Expansion, RandomMatchingsArePerfect) {
  Rng rng(8);
  const BipartiteGraph b = random_bipartite(16, 3, rng);
  for (const auto& m : b.matchings) {
    std::vector<int> sorted = m;
    std::sort(sorted.begin(), sorted.end());
    for (int k = 0; k < 16; ++k) EXPECT_EQ(sorted[k], k);
  }
}

TEST(Expansion, ReportAndLimits) {
  EXPECT_NEAR(expansion_delta(16), 1.0 / 8.0, 1e-16);
  try {
    bipartite_check(21, 3, 1, CheckMode::Exhaustive, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ExhaustiveTooLarge);
  }
  const BipartiteReport a = bipartite_check(8, 3, 40, CheckMode::Exhaustive, 3, 1);
  const BipartiteReport b = bipartite_check(8, 3, 40, CheckMode::Exhaustive, 3, 2);
  EXPECT_EQ(a.pass_i, b.pass_i);
  EXPECT_EQ(a.pass_ii, b.pass_ii);
  EXPECT_NEAR(a.rate_i.rate, a.pass_i / 40.0, 1e-15);
  EXPECT_NO_THROW(bipartite_check(24, 3, 2, CheckMode::MonteCarlo, 0));
}

}  // namespace
}  // namespace sunflower
