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

#include "sunflower/classical.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <deque>
#include <set>
#include <string>
#include <unordered_map>

#include "sunflower/parallel.hpp"

namespace sunflower {

Label GraphOracle::neighbor(Label v, int k) {
  ++used_.neighbor;
  return g_.neighbor_unmetered(v, k);
}

std::uint32_t GraphOracle::multiplicity(Label v, Label w) {
  ++used_.multiplicity;
  return g_.multiplicity_unmetered(v, w);
}

bool GraphOracle::is_target(Label v) {
  ++used_.indicator;
  return g_.is_target_unmetered(v);
}

void GraphOracle::reconcile() {
  MeterSnapshot delta{used_.neighbor - reconciled_.neighbor, used_.multiplicity - reconciled_.multiplicity,
                      used_.indicator - reconciled_.indicator};
  g_.meters().add(delta);
  reconciled_ = used_;
}

std::string_view strategy_name(Strategy s) {
  switch (s) {
    case Strategy::RandomEmbedding: return "random-embedding";
    case Strategy::RandomWalk: return "random-walk";
    case Strategy::BreadthFirst: return "breadth-first";
  }
  return "unknown";
}

Strategy parse_strategy(std::string_view name) {
  if (name == "random-embedding") return Strategy::RandomEmbedding;
  if (name == "random-walk") return Strategy::RandomWalk;
  if (name == "breadth-first") return Strategy::BreadthFirst;
  throw Error(ErrorCode::DomainError, "unknown strategy: " + std::string(name));
}

namespace {

// Shared bookkeeping: discovered vertices and the undirected edges seen so far.
class Exploration {
 public:
  Exploration(AdjacencyOracle& oracle, std::uint64_t budget, bool stop_on_cycle)
      : oracle_(oracle), budget_(budget), stop_on_cycle_(stop_on_cycle) {
    discover(oracle.start());
  }

  bool done() const {
    return out_.found_t || (stop_on_cycle_ && out_.found_cycle) || out_.queries_used >= budget_;
  }

  struct Step {
    std::optional<Label> neighbor;  // nullopt for a sentinel
    bool fresh = false;             // first time this label was seen
  };

  Step step(Label v, int k) {
    ++out_.queries_used;
    const Label w = oracle_.neighbor(v, k);
    if (oracle_.is_sentinel(w)) return {};
    if (!edges_.insert(std::minmax(v, w)).second) return {w, false};
    if (seen_.count(w)) {
      out_.found_cycle = true;
      return {w, false};
    }
    discover(w);
    return {w, true};
  }

  ExplorationOutcome finish() {
    out_.distinct_vertices = seen_.size();
    return std::move(out_);
  }

 private:
  void discover(Label w) {
    seen_.insert(w);
    out_.discovery_order.push_back(w);
    if (oracle_.is_target(w)) out_.found_t = true;
  }

  AdjacencyOracle& oracle_;
  std::uint64_t budget_;
  bool stop_on_cycle_;
  std::set<Label> seen_;
  std::set<std::pair<Label, Label>> edges_;
  ExplorationOutcome out_;
};

std::vector<int> shuffled_indices(int d, Rng& rng) {
  std::vector<int> ks(d);
  for (int k = 0; k < d; ++k) ks[k] = k + 1;
  shuffle_range(ks.begin(), ks.end(), rng);
  return ks;
}

}  // namespace

ExplorationOutcome run_explorer(AdjacencyOracle& oracle, Strategy strategy, std::uint64_t budget, Rng& rng,
                                bool stop_on_cycle) {
  Exploration ex(oracle, budget, stop_on_cycle);
  const int d = oracle.degree();
  switch (strategy) {
    case Strategy::RandomEmbedding: {
      // Grow an embedded tree: pick a uniformly random frontier vertex and map
      // its children onto its neighbors in a uniformly random order.
      std::vector<Label> frontier{oracle.start()};
      while (!ex.done() && !frontier.empty()) {
        const std::size_t pick = uniform_below(rng, frontier.size());
        const Label v = frontier[pick];
        frontier[pick] = frontier.back();
        frontier.pop_back();
        for (int k : shuffled_indices(d, rng)) {
          if (ex.done()) break;
          if (auto st = ex.step(v, k); st.fresh) frontier.push_back(*st.neighbor);
        }
      }
      break;
    }
    case Strategy::RandomWalk: {
      Label v = oracle.start();
      while (!ex.done()) {
        const int k = static_cast<int>(uniform_below(rng, d)) + 1;
        if (auto st = ex.step(v, k); st.neighbor) v = *st.neighbor;
      }
      break;
    }
    case Strategy::BreadthFirst: {
      std::deque<Label> queue{oracle.start()};
      while (!ex.done() && !queue.empty()) {
        const Label v = queue.front();
        queue.pop_front();
        for (int k = 1; k <= d && !ex.done(); ++k) {
          if (auto st = ex.step(v, k); st.fresh) queue.push_back(*st.neighbor);
        }
      }
      break;
    }
  }
  return ex.finish();
}

std::vector<ExplorationOutcome> run_explorer_trials(const SunflowerGraph& g, const ExplorerConfig& cfg, int workers) {
  std::vector<ExplorationOutcome> out(static_cast<std::size_t>(cfg.trials));
  parallel_for(static_cast<std::uint64_t>(cfg.trials), workers, [&](std::uint64_t t) {
    GraphOracle oracle(g);
    Rng rng = trial_rng(cfg.seed, t);
    out[t] = run_explorer(oracle, cfg.strategy, cfg.budget, rng, cfg.stop_on_cycle);
    out[t].discovery_order.shrink_to_fit();
  });
  return out;
}

std::uint64_t budget_for(int d, int n, double c) {
  const double q = std::floor(std::pow(static_cast<double>(d - 1), c * n) * (1.0 + 1e-12));
  return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(q));
}

GraphParams lower_bound_params(int d, int n, std::uint64_t seed, std::int64_t n_aux) {
  RawParams raw{d, n + 1, n, 0, seed};
  GraphParams p = validate_params(raw);
  const std::uint64_t ng = p.graph_vertex_count();
  raw.n_aux = n_aux >= 0 ? n_aux : static_cast<std::int64_t>(ng * ng);
  return validate_params(raw);
}

std::vector<SuccessRow> estimate_success(int d, const std::vector<int>& ns, double c, Strategy strategy, int trials,
                                         std::uint64_t seed, int workers, std::int64_t n_aux) {
  std::vector<SuccessRow> rows;
  for (int n : ns) {
    const GraphParams p = lower_bound_params(d, n, seed, n_aux);
    SunflowerGraph g(p, Backend::Implicit);
    ExplorerConfig cfg{strategy, budget_for(d, n, c), trials, derive_key(seed, kTagSweep, static_cast<std::uint64_t>(n)), true};
    const auto outcomes = run_explorer_trials(g, cfg, workers);
    SuccessRow row;
    row.strategy = strategy;
    row.d = p.d;
    row.m = p.m;
    row.n = p.n;
    row.n_aux = p.n_aux;
    row.budget = cfg.budget;
    row.trials = trials;
    for (const auto& o : outcomes) {
      row.successes += o.success();
      row.found_t += o.found_t;
      row.found_cycle += o.found_cycle;
    }
    row.rate = wilson_interval(row.successes, static_cast<std::uint64_t>(trials));
    rows.push_back(row);
  }
  return rows;
}

GuessReport guess_hit_rate(const SunflowerGraph& g, std::uint64_t guesses, std::uint64_t seed) {
  GraphOracle oracle(g);
  Rng rng(derive_key(seed, kTagSweep, 0x6775657373ULL));
  GuessReport r;
  const auto& p = g.params();
  const double ng = static_cast<double>(p.graph_vertex_count());
  r.bound = 2.0 * ng / (ng + static_cast<double>(p.n_aux));
  while (r.guesses < guesses) {
    const Label v = uniform_below(rng, g.label_space());
    if (v == g.s_label()) continue;  // the only label handed out up front
    ++r.guesses;
    r.hits += !oracle.is_sentinel(oracle.neighbor(v, 1));
  }
  r.rate = static_cast<double>(r.hits) / static_cast<double>(r.guesses);
  return r;
}

}  // namespace sunflower
