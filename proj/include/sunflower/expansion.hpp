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

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sunflower/graph.hpp"
#include "sunflower/rng.hpp"
#include "sunflower/stats.hpp"

namespace sunflower {

/// Graphs at or above this many vertices use Lanczos instead of a dense solve.
inline constexpr std::uint64_t kDenseEigenLimit = 5000;

struct GapResult {
  double lambda1 = 0.0;         // from the all-ones vector; d for a regular graph
  double lambda1_residual = 0.0;  // ||A 1 - d 1|| / ||1||
  double lambda2 = 0.0;
  double gap = 0.0;             // d - lambda2
  double normalized = 0.0;      // gap * (log2 |V|)^3
  std::string method;           // "dense" or "lanczos"
  int iterations = 0;
};

enum class GapMethod { Auto, Dense, Lanczos };

/// Top of the full adjacency spectrum (explicit backend, graph vertices only).
/// Auto picks the dense solver below kDenseEigenLimit vertices.
GapResult adjacency_gap(const SunflowerGraph& g, GapMethod method = GapMethod::Auto);

/// |Gamma(T) \ T| / |T| for a set of graph vertex indices.
double subset_expansion_ratio(const SunflowerGraph& g, const std::vector<std::uint64_t>& subset);

/// Exact ratio for T = one full tree: (2 + 2 * leaves) / (d-1)^(m-1).
double tree_expansion_ratio(const GraphParams& p);

struct ExpansionSample {
  std::vector<std::uint64_t> sizes;
  std::vector<double> min_ratio;  // per size
  std::vector<std::uint64_t> samples_per_size;
  double overall_min = 0.0;
};

/// Grow connected subsets from uniform random seeds by randomized BFS to each
/// target size (cycling through `sizes`), `trials` subsets in total. An empty
/// size grid means powers of two up to |V|/2.
ExpansionSample vertex_expansion_sample(const SunflowerGraph& g, int trials, std::vector<std::uint64_t> sizes,
                                        std::uint64_t seed);

/// 1 / (2 log2 N).
double expansion_delta(int N);

/// Bipartite graph with N vertices per side joined by D perfect matchings.
struct BipartiteGraph {
  int N = 0;
  int D = 0;
  std::vector<std::vector<int>> matchings;  // matchings[k][left] = right

  /// Right-side neighbor mask of each left vertex (N <= 32).
  std::vector<std::uint64_t> left_masks() const;
};

/// D independent uniform perfect matchings (Fisher-Yates).
BipartiteGraph random_bipartite(int N, int D, Rng& rng);

enum class CheckMode { Exhaustive, MonteCarlo };
std::string_view check_mode_name(CheckMode m);
CheckMode parse_check_mode(std::string_view name);

struct BipartiteVerdict {
  bool cond_i = true;   // |Gamma(L')| >= (1 + delta)|L'| for all |L'| <= 2N/3
  bool cond_ii = true;  // |Gamma(T) \ T| >= (delta/2)|T| for all T in L u R, |T| <= N
  bool cond_ii_exhaustive = false;
};

/// Exhaustive mode enumerates every left subset for (i) (N <= 20) and every
/// subset of both sides for (ii) when 2N <= 22, falling back to sampling for
/// (ii) beyond that. Monte Carlo mode samples `samples` subsets per condition.
BipartiteVerdict check_bipartite(const BipartiteGraph& b, CheckMode mode, Rng& rng, int samples = 20000);

struct BipartiteReport {
  int N = 0, D = 0, draws = 0;
  CheckMode mode = CheckMode::Exhaustive;
  double delta = 0.0;
  std::uint64_t pass_i = 0, pass_ii = 0;
  Interval rate_i, rate_ii;
  bool cond_ii_exhaustive = false;
};

/// Throws ExhaustiveTooLarge for exhaustive mode with N > 20.
BipartiteReport bipartite_check(int N, int D, int draws, CheckMode mode, std::uint64_t seed, int workers = 1);

}  // namespace sunflower
