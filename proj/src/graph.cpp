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

#include "sunflower/graph.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "sunflower/rng.hpp"

namespace sunflower {

std::string_view backend_name(Backend b) { return b == Backend::Explicit ? "explicit" : "implicit"; }

Backend parse_backend(std::string_view name) {
  if (name == "explicit") return Backend::Explicit;
  if (name == "implicit") return Backend::Implicit;
  throw Error(ErrorCode::DomainError, "unknown backend: " + std::string(name));
}

MeterSnapshot& MeterSnapshot::operator+=(const MeterSnapshot& o) {
  neighbor += o.neighbor;
  multiplicity += o.multiplicity;
  indicator += o.indicator;
  return *this;
}

MeterSnapshot QueryMeter::snapshot() const {
  return {neighbor.load(std::memory_order_relaxed), multiplicity.load(std::memory_order_relaxed),
          indicator.load(std::memory_order_relaxed)};
}

void QueryMeter::reset() {
  neighbor.store(0);
  multiplicity.store(0);
  indicator.store(0);
}

void QueryMeter::add(const MeterSnapshot& s) {
  neighbor.fetch_add(s.neighbor, std::memory_order_relaxed);
  multiplicity.fetch_add(s.multiplicity, std::memory_order_relaxed);
  indicator.fetch_add(s.indicator, std::memory_order_relaxed);
}

SunflowerGraph::SunflowerGraph(const GraphParams& params, Backend backend)
    : params_(params), backend_(backend), bits_(params.label_bits()) {
  if (backend == Backend::Explicit && params.graph_vertex_count() > kExplicitCap) {
    throw Error(ErrorCode::ExplicitTooLarge,
                "explicit backend supports at most " + std::to_string(kExplicitCap) +
                    " graph vertices; got " + std::to_string(params.graph_vertex_count()));
  }
  labels_ = KeyedPermutation(label_space(), derive_key(params.seed, kTagLabels));
  const std::uint64_t leaves = params.leaves_per_tree();
  const int per_pair = params.matchings_per_pair();
  matchings_.reserve(static_cast<std::size_t>(params.n) * per_pair);
  for (int i = 0; i < params.n; ++i) {
    for (int k = 0; k < per_pair; ++k) {
      matchings_.emplace_back(leaves, derive_key(params.seed, kTagMatching, i, k));
    }
  }
  s_label_ = label_of({1, 1, 0});
  t_label_ = label_of({params.n / 2 + 1, 1, 0});
  if (backend == Backend::Explicit) build_explicit();
}

std::optional<std::uint64_t> SunflowerGraph::index_of(Label v) const {
  if (v >= label_space()) return std::nullopt;
  const std::uint64_t x = labels_.inverse(v);
  if (x >= params_.total_vertex_count()) return std::nullopt;
  return x;
}

std::uint64_t SunflowerGraph::index_of(const VertexCoord& c) const {
  return static_cast<std::uint64_t>(c.tree - 1) * params_.vertices_per_tree() +
         params_.layer_offset(c.layer) + c.member;
}

VertexCoord SunflowerGraph::coord_of_index(std::uint64_t index) const {
  const std::uint64_t per_tree = params_.vertices_per_tree();
  VertexCoord c;
  c.tree = static_cast<int>(index / per_tree) + 1;
  const std::uint64_t p = index % per_tree;
  if (p == 0) return c;
  const std::uint64_t b = params_.d - 1;
  std::uint64_t start = 1;
  c.layer = 2;
  while (p >= start * b) {
    start *= b;
    ++c.layer;
  }
  c.member = p - start;
  return c;
}

std::optional<VertexCoord> SunflowerGraph::locate(Label v) const {
  auto idx = index_of(v);
  if (!idx || !is_graph_index(*idx)) return std::nullopt;
  return coord_of_index(*idx);
}

std::uint64_t SunflowerGraph::leaf_partner(int tree, int k, std::uint64_t leaf, bool forward) const {
  const int per_pair = params_.matchings_per_pair();
  if (forward) return matchings_[static_cast<std::size_t>(tree - 1) * per_pair + k].forward(leaf);
  const int prev = tree == 1 ? params_.n : tree - 1;
  return matchings_[static_cast<std::size_t>(prev - 1) * per_pair + k].inverse(leaf);
}

void SunflowerGraph::structural_neighbors(std::uint64_t index, std::vector<std::uint64_t>& out) const {
  out.clear();
  if (!is_graph_index(index)) return;
  const VertexCoord c = coord_of_index(index);
  const int n = params_.n;
  const int m = params_.m;
  const std::uint64_t b = params_.d - 1;
  const int next_tree = c.tree == n ? 1 : c.tree + 1;
  const int prev_tree = c.tree == 1 ? n : c.tree - 1;
  if (c.layer == 1) {
    out.push_back(index_of({prev_tree, 1, 0}));
    out.push_back(index_of({next_tree, 1, 0}));
    for (int ch = 0; ch < params_.d - 2; ++ch) {
      out.push_back(index_of({c.tree, 2, static_cast<std::uint64_t>(ch)}));
    }
    return;
  }
  if (c.layer == 2) {
    out.push_back(index_of({c.tree, 1, 0}));
  } else {
    out.push_back(index_of({c.tree, c.layer - 1, c.member / b}));
  }
  if (c.layer < m) {
    for (std::uint64_t ch = 0; ch < b; ++ch) {
      out.push_back(index_of({c.tree, c.layer + 1, c.member * b + ch}));
    }
    return;
  }
  for (int k = 0; k < params_.matchings_per_pair(); ++k) {
    out.push_back(index_of({next_tree, m, leaf_partner(c.tree, k, c.member, true)}));
    out.push_back(index_of({prev_tree, m, leaf_partner(c.tree, k, c.member, false)}));
  }
}

void SunflowerGraph::sort_by_label(std::vector<std::uint64_t>& idx) const {
  std::sort(idx.begin(), idx.end(),
            [&](std::uint64_t a, std::uint64_t b) { return labels_.forward(a) < labels_.forward(b); });
}

std::vector<std::uint64_t> SunflowerGraph::neighbor_indices(std::uint64_t index) const {
  std::vector<std::uint64_t> out;
  if (backend_ == Backend::Explicit) {
    if (!is_graph_index(index)) return out;
    out.assign(targets_.begin() + offsets_[index], targets_.begin() + offsets_[index + 1]);
    return out;
  }
  structural_neighbors(index, out);
  sort_by_label(out);
  return out;
}

void SunflowerGraph::build_explicit() {
  // Assemble from an undirected edge list so the result is independent of the
  // per-vertex structural rule used by the implicit backend.
  const std::uint64_t ng = params_.graph_vertex_count();
  const int n = params_.n;
  const int m = params_.m;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  edges.reserve(ng * params_.d / 2);
  auto add = [&](std::uint64_t a, std::uint64_t b) {
    edges.emplace_back(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b));
  };
  for (int i = 1; i <= n; ++i) {
    add(index_of({i, 1, 0}), index_of({i == n ? 1 : i + 1, 1, 0}));
    for (std::uint64_t r = 0; r < params_.layer_size(2); ++r) add(index_of({i, 1, 0}), index_of({i, 2, r}));
    for (int j = 3; j <= m; ++j) {
      for (std::uint64_t r = 0; r < params_.layer_size(j); ++r) {
        add(index_of({i, j - 1, r / (params_.d - 1)}), index_of({i, j, r}));
      }
    }
    for (int k = 0; k < params_.matchings_per_pair(); ++k) {
      for (std::uint64_t r = 0; r < params_.leaves_per_tree(); ++r) {
        add(index_of({i, m, r}), index_of({i == n ? 1 : i + 1, m, leaf_partner(i, k, r, true)}));
      }
    }
  }
  offsets_.assign(ng + 1, 0);
  for (auto [a, b] : edges) {
    ++offsets_[a + 1];
    ++offsets_[b + 1];
  }
  for (std::uint64_t v = 0; v < ng; ++v) offsets_[v + 1] += offsets_[v];
  targets_.assign(offsets_[ng], 0);
  std::vector<std::uint64_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (auto [a, b] : edges) {
    targets_[fill[a]++] = b;
    targets_[fill[b]++] = a;
  }
  for (std::uint64_t v = 0; v < ng; ++v) {
    std::sort(targets_.begin() + offsets_[v], targets_.begin() + offsets_[v + 1],
              [&](std::uint32_t a, std::uint32_t b) { return labels_.forward(a) < labels_.forward(b); });
  }
}

Label SunflowerGraph::neighbor_unmetered(Label v, int k) const {
  if (k < 1) return sentinel(k);
  auto idx = index_of(v);
  if (!idx || !is_graph_index(*idx)) return sentinel(k);
  const auto nb = neighbor_indices(*idx);
  int distinct = 0;
  for (std::size_t p = 0; p < nb.size(); ++p) {
    if (p > 0 && nb[p] == nb[p - 1]) continue;
    if (++distinct == k) return labels_.forward(nb[p]);
  }
  return sentinel(k);
}

std::uint32_t SunflowerGraph::multiplicity_unmetered(Label v, Label w) const {
  auto a = index_of(v);
  auto b = index_of(w);
  if (!a || !b || !is_graph_index(*a) || !is_graph_index(*b)) return 0;
  const auto nb = neighbor_indices(*a);
  return static_cast<std::uint32_t>(std::count(nb.begin(), nb.end(), *b));
}

Label SunflowerGraph::neighbor(Label v, int k) const {
  meters_.neighbor.fetch_add(1, std::memory_order_relaxed);
  return neighbor_unmetered(v, k);
}

std::uint32_t SunflowerGraph::multiplicity(Label v, Label w) const {
  meters_.multiplicity.fetch_add(1, std::memory_order_relaxed);
  return multiplicity_unmetered(v, w);
}

bool SunflowerGraph::is_target(Label v) const {
  meters_.indicator.fetch_add(1, std::memory_order_relaxed);
  return is_target_unmetered(v);
}

void SunflowerGraph::require_explicit(const char* what) const {
  if (backend_ != Backend::Explicit) {
    throw Error(ErrorCode::ImplicitBackendUnsupported, std::string(what) + " requires the explicit backend");
  }
}

const std::vector<std::uint64_t>& SunflowerGraph::csr_offsets() const {
  require_explicit("adjacency access");
  return offsets_;
}

const std::vector<std::uint32_t>& SunflowerGraph::csr_targets() const {
  require_explicit("adjacency access");
  return targets_;
}

// ---------------------------------------------------------------------------
// Census

std::uint64_t closed_form_edges(const GraphParams& p, int i, int j, int k, int l) {
  if (i == k && (j - l == 1 || l - j == 1)) return std::max(p.layer_size(j), p.layer_size(l));
  const bool adjacent_trees = (k == (i % p.n) + 1) || (i == (k % p.n) + 1);
  if (!adjacent_trees) return 0;
  if (j == 1 && l == 1) return 1;
  if (j == p.m && l == p.m) return static_cast<std::uint64_t>(p.matchings_per_pair()) * p.leaves_per_tree();
  return 0;
}

namespace {

int sv_id(const GraphParams& p, int i, int j) { return (j - 1) * p.n + (i - 1); }

}  // namespace

bool SupervertexCensus::consistent() const {
  for (int j = 1; j <= params.m; ++j) {
    for (int i = 1; i <= params.n; ++i) {
      if (sizes_counted[sv_id(params, i, j)] != params.layer_size(j)) return false;
    }
  }
  return std::all_of(entries.begin(), entries.end(),
                     [](const CensusEntry& e) { return e.counted == e.closed_form; });
}

std::uint64_t SupervertexCensus::edges(int i, int j, int k, int l) const {
  for (const auto& e : entries) {
    if ((e.i == i && e.j == j && e.k == k && e.l == l) || (e.i == k && e.j == l && e.k == i && e.l == j)) {
      return e.counted;
    }
  }
  return 0;
}

SupervertexCensus supervertex_census(const SunflowerGraph& g) {
  const auto& p = g.params();
  const auto& off = g.csr_offsets();
  const auto& tgt = g.csr_targets();
  const std::uint64_t ng = p.graph_vertex_count();
  const int cells = p.m * p.n;

  std::vector<int> sv_of(ng);
  SupervertexCensus census;
  census.params = p;
  census.sizes_counted.assign(cells, 0);
  for (std::uint64_t v = 0; v < ng; ++v) {
    const VertexCoord c = g.coord_of_index(v);
    sv_of[v] = sv_id(p, c.tree, c.layer);
    ++census.sizes_counted[sv_of[v]];
  }
  std::map<std::pair<int, int>, std::uint64_t> counted;
  for (std::uint64_t v = 0; v < ng; ++v) {
    for (std::uint64_t e = off[v]; e < off[v + 1]; ++e) {
      if (tgt[e] <= v) continue;
      int a = sv_of[v];
      int b = sv_of[tgt[e]];
      if (a > b) std::swap(a, b);
      ++counted[{a, b}];
    }
  }
  for (int a = 0; a < cells; ++a) {
    for (int b = a; b < cells; ++b) {
      const int i = a % p.n + 1, j = a / p.n + 1, k = b % p.n + 1, l = b / p.n + 1;
      const std::uint64_t closed = closed_form_edges(p, i, j, k, l);
      auto it = counted.find({a, b});
      const std::uint64_t c = it == counted.end() ? 0 : it->second;
      if (closed != 0 || c != 0) census.entries.push_back({i, j, k, l, c, closed});
    }
  }
  return census;
}

void write_census_csv(const SupervertexCensus& census, std::ostream& out) {
  out << "kind,i,j,k,l,counted,closed_form\n";
  const auto& p = census.params;
  for (int j = 1; j <= p.m; ++j) {
    for (int i = 1; i <= p.n; ++i) {
      out << "size," << i << ',' << j << ",,," << census.sizes_counted[sv_id(p, i, j)] << ','
          << p.layer_size(j) << '\n';
    }
  }
  for (const auto& e : census.entries) {
    out << "edges," << e.i << ',' << e.j << ',' << e.k << ',' << e.l << ',' << e.counted << ','
        << e.closed_form << '\n';
  }
}

}  // namespace sunflower
