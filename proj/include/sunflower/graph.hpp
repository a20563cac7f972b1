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

#include <atomic>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string_view>
#include <vector>

#include "sunflower/keyed_permutation.hpp"
#include "sunflower/params.hpp"

namespace sunflower {

using Label = std::uint64_t;

enum class Backend { Explicit, Implicit };

std::string_view backend_name(Backend b);
Backend parse_backend(std::string_view name);

/// Structural position of a graph vertex. Tree and layer are 1-based; member
/// indexes the vertex within its supervertex S_{tree,layer}.
struct VertexCoord {
  int tree = 1;
  int layer = 1;
  std::uint64_t member = 0;
  bool operator==(const VertexCoord&) const = default;
};

/// Plain copy of the three oracle meters.
struct MeterSnapshot {
  std::uint64_t neighbor = 0;      // O_{G,1}
  std::uint64_t multiplicity = 0;  // O_{G,2}
  std::uint64_t indicator = 0;     // f_t
  std::uint64_t total() const { return neighbor + multiplicity + indicator; }
  MeterSnapshot& operator+=(const MeterSnapshot& o);
  bool operator==(const MeterSnapshot&) const = default;
};

struct QueryMeter {
  std::atomic<std::uint64_t> neighbor{0};
  std::atomic<std::uint64_t> multiplicity{0};
  std::atomic<std::uint64_t> indicator{0};

  MeterSnapshot snapshot() const;
  void reset();
  void add(const MeterSnapshot& s);
};

/// The enlarged regular sunflower graph behind metered adjacency-list oracles.
///
/// Vertices are stored by structural index: tree-major, then layer, then member.
/// Indices >= graph_vertex_count() are isolated padding vertices, and a keyed
/// permutation of the full 2^bits label space scrambles indices into labels.
/// Labels whose preimage is not a vertex index behave like isolated vertices.
///
/// Both backends answer every oracle query identically. The explicit backend
/// additionally materializes the adjacency (with multiplicity) for trusted
/// introspection such as the census or full-space matrix products.
class SunflowerGraph {
 public:
  static constexpr std::uint64_t kExplicitCap = 10'000'000;

  SunflowerGraph(const GraphParams& params, Backend backend);
  SunflowerGraph(const SunflowerGraph&) = delete;
  SunflowerGraph& operator=(const SunflowerGraph&) = delete;

  const GraphParams& params() const { return params_; }
  Backend backend() const { return backend_; }
  int label_bits() const { return bits_; }
  std::uint64_t label_space() const { return std::uint64_t{1} << bits_; }
  Label sentinel(int k) const { return static_cast<Label>(k) + label_space(); }
  bool is_sentinel(Label v) const { return v >= label_space(); }
  Label s_label() const { return s_label_; }
  Label t_label() const { return t_label_; }
  std::uint64_t label_key() const { return labels_.key(); }

  // Metered oracles. These are the only entry points an explorer may use.
  /// k-th (1-based) distinct neighbor in ascending label order, or k + 2^bits.
  Label neighbor(Label v, int k) const;
  std::uint32_t multiplicity(Label v, Label w) const;
  bool is_target(Label v) const;

  // Unmetered versions for oracle views that keep their own meters.
  Label neighbor_unmetered(Label v, int k) const;
  std::uint32_t multiplicity_unmetered(Label v, Label w) const;
  bool is_target_unmetered(Label v) const { return v == t_label_; }

  QueryMeter& meters() const { return meters_; }

  // Trusted introspection (never exposed to explorers).
  Label label_of_index(std::uint64_t index) const { return labels_.forward(index); }
  /// Vertex index of a label, or nullopt for labels outside the vertex set.
  std::optional<std::uint64_t> index_of(Label v) const;
  std::uint64_t index_of(const VertexCoord& c) const;
  VertexCoord coord_of_index(std::uint64_t index) const;
  Label label_of(const VertexCoord& c) const { return label_of_index(index_of(c)); }
  std::optional<VertexCoord> locate(Label v) const;
  bool is_graph_index(std::uint64_t index) const { return index < params_.graph_vertex_count(); }

  /// Partner of `leaf` in tree `tree` under matching `k` (0-based) toward tree+1
  /// (forward) or tree-1 (backward). Trees are 1-based.
  std::uint64_t leaf_partner(int tree, int k, std::uint64_t leaf, bool forward) const;

  /// Structural neighbor indices of a graph vertex, with multiplicity (d entries),
  /// sorted by label. Isolated vertices yield an empty list.
  std::vector<std::uint64_t> neighbor_indices(std::uint64_t index) const;

  // Explicit backend only: CSR adjacency over graph vertex indices, rows sorted by label.
  const std::vector<std::uint64_t>& csr_offsets() const;
  const std::vector<std::uint32_t>& csr_targets() const;

 private:
  void require_explicit(const char* what) const;
  void build_explicit();
  void structural_neighbors(std::uint64_t index, std::vector<std::uint64_t>& out) const;
  void sort_by_label(std::vector<std::uint64_t>& idx) const;

  GraphParams params_;
  Backend backend_;
  int bits_;
  KeyedPermutation labels_;
  std::vector<KeyedPermutation> matchings_;  // [tree-1][k], tree i -> tree i+1
  Label s_label_ = 0;
  Label t_label_ = 0;
  std::vector<std::uint64_t> offsets_;
  std::vector<std::uint32_t> targets_;
  mutable QueryMeter meters_;
};

/// Supervertex edge census: for each unordered supervertex pair with edges in
/// either the recount or the closed form, the two values side by side.
struct CensusEntry {
  int i, j, k, l;
  std::uint64_t counted;
  std::uint64_t closed_form;
};

struct SupervertexCensus {
  GraphParams params;
  std::vector<std::uint64_t> sizes_counted;  // s_{i,j} at (j-1)*n + (i-1)
  std::vector<CensusEntry> entries;
  bool consistent() const;
  /// Recounted edge count between supervertices (i,j) and (k,l).
  std::uint64_t edges(int i, int j, int k, int l) const;
};

/// Closed-form e_{ij,kl} for valid params (1-based indices).
std::uint64_t closed_form_edges(const GraphParams& p, int i, int j, int k, int l);

/// Recount supervertex sizes and edges from the materialized adjacency.
SupervertexCensus supervertex_census(const SunflowerGraph& g);

void write_census_csv(const SupervertexCensus& census, std::ostream& out);

}  // namespace sunflower
