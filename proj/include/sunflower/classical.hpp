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
#include <string_view>
#include <vector>

#include "sunflower/graph.hpp"
#include "sunflower/rng.hpp"
#include "sunflower/stats.hpp"

namespace sunflower {

/// What a classical explorer may see: the three oracles and the start label.
class AdjacencyOracle {
 public:
  virtual ~AdjacencyOracle() = default;
  virtual Label start() const = 0;
  virtual int degree() const = 0;
  virtual bool is_sentinel(Label v) const = 0;
  virtual Label neighbor(Label v, int k) = 0;
  virtual std::uint32_t multiplicity(Label v, Label w) = 0;
  virtual bool is_target(Label v) = 0;
};

/// Per-trial view of a graph with private meters. reconcile() adds them to the
/// graph's shared meters exactly once.
class GraphOracle final : public AdjacencyOracle {
 public:
  explicit GraphOracle(const SunflowerGraph& g) : g_(g) {}
  ~GraphOracle() override { reconcile(); }

  Label start() const override { return g_.s_label(); }
  int degree() const override { return g_.params().d; }
  bool is_sentinel(Label v) const override { return g_.is_sentinel(v); }
  Label neighbor(Label v, int k) override;
  std::uint32_t multiplicity(Label v, Label w) override;
  bool is_target(Label v) override;

  const MeterSnapshot& used() const { return used_; }
  void reconcile();

 private:
  const SunflowerGraph& g_;
  MeterSnapshot used_;
  MeterSnapshot reconciled_;
};

enum class Strategy { RandomEmbedding, RandomWalk, BreadthFirst };

std::string_view strategy_name(Strategy s);
Strategy parse_strategy(std::string_view name);
/// Random walk and breadth-first are extra baselines outside the embedding model.
inline bool is_baseline(Strategy s) { return s != Strategy::RandomEmbedding; }

struct ExplorerConfig {
  Strategy strategy = Strategy::RandomEmbedding;
  std::uint64_t budget = 1;  // neighbor-oracle queries
  int trials = 1;
  std::uint64_t seed = 0;
  bool stop_on_cycle = true;
};

struct ExplorationOutcome {
  bool found_t = false;
  bool found_cycle = false;
  std::uint64_t queries_used = 0;        // neighbor-oracle queries, <= budget
  std::uint64_t distinct_vertices = 0;   // including the start
  std::vector<Label> discovery_order;    // labels in the order first seen, start first

  bool success() const { return found_t || found_cycle; }
};

/// Explore from the start label with at most `budget` neighbor queries. Every
/// newly discovered label is checked with the target oracle. A cycle is an edge
/// to an already discovered vertex that was not the edge used to reach it.
/// Exploration ends at t, at the budget, or (if `stop_on_cycle`) at the first cycle.
ExplorationOutcome run_explorer(AdjacencyOracle& oracle, Strategy strategy, std::uint64_t budget, Rng& rng,
                                bool stop_on_cycle = true);

/// Trials 0..trials-1 with per-trial streams, each against its own GraphOracle.
std::vector<ExplorationOutcome> run_explorer_trials(const SunflowerGraph& g, const ExplorerConfig& cfg, int workers);

/// floor((d-1)^(c n)), at least 1.
std::uint64_t budget_for(int d, int n, double c);

struct SuccessRow {
  Strategy strategy = Strategy::RandomEmbedding;
  int d = 0, m = 0, n = 0;
  std::uint64_t n_aux = 0;
  std::uint64_t budget = 0;
  int trials = 0;
  std::uint64_t successes = 0;
  std::uint64_t found_t = 0;
  std::uint64_t found_cycle = 0;
  Interval rate;
};

/// Lower-bound instance for tree count n: m = n + 1, N_aux = N_G^2 (or the
/// given override when non-negative), implicit backend.
GraphParams lower_bound_params(int d, int n, std::uint64_t seed, std::int64_t n_aux = -1);

/// Success rates with Wilson intervals for each n in `ns` at budget (d-1)^(c n).
std::vector<SuccessRow> estimate_success(int d, const std::vector<int>& ns, double c, Strategy strategy, int trials,
                                         std::uint64_t seed, int workers, std::int64_t n_aux = -1);

struct GuessReport {
  std::uint64_t guesses = 0;
  std::uint64_t hits = 0;
  double rate = 0.0;
  double bound = 0.0;  // 2 N_G / (N_G + N_aux)
};

/// Probe uniformly random labels (never returned by any oracle) and count the
/// ones that turn out to be graph vertices.
GuessReport guess_hit_rate(const SunflowerGraph& g, std::uint64_t guesses, std::uint64_t seed);

}  // namespace sunflower
