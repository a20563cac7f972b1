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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sunflower/errors.hpp"

namespace sunflower {

/// Unvalidated parameter tuple, as read from flags or a config file.
struct RawParams {
  std::int64_t d = 3;
  std::int64_t m = 5;
  std::int64_t n = 8;
  std::int64_t n_aux = 0;
  std::uint64_t seed = 0;
};

enum class ParamViolation {
  DegreeTooSmall,
  EvenDegree,
  HeightTooSmall,
  EvenHeight,
  TreeCountTooSmall,
  TreeCountNotMultipleOf4,
  NegativeAuxCount,
  InstanceTooLarge,
};

std::string_view violation_name(ParamViolation v);

class InvalidParamsError : public Error {
 public:
  explicit InvalidParamsError(std::vector<ParamViolation> violations);
  const std::vector<ParamViolation>& violations() const noexcept { return violations_; }

 private:
  std::vector<ParamViolation> violations_;
};

/// Validated instance description. The single source of truth for a sunflower
/// graph: degree d, tree height m, tree count n, isolated-vertex padding and seed.
///
/// Trees are indexed 1..n and layers 1..m throughout the public API.
struct GraphParams {
  int d = 3;
  int m = 5;
  int n = 8;
  std::uint64_t n_aux = 0;
  std::uint64_t seed = 0;

  /// Vertices in layer `layer` of one tree: 1 for the root, (d-2)(d-1)^(layer-2) below.
  std::uint64_t layer_size(int layer) const;
  /// Index of the first vertex of `layer` within its tree (layers stored root-first).
  std::uint64_t layer_offset(int layer) const;
  std::uint64_t leaves_per_tree() const { return layer_size(m); }
  std::uint64_t vertices_per_tree() const;
  /// n (d-1)^(m-1).
  std::uint64_t graph_vertex_count() const;
  std::uint64_t total_vertex_count() const { return graph_vertex_count() + n_aux; }
  /// ceil(log2(total vertex count)).
  int label_bits() const;
  int matchings_per_pair() const { return (d - 1) / 2; }
  /// The mild-expander guarantee is only proven for d >= 7.
  bool expansion_guaranteed() const { return d >= 7; }

  bool operator==(const GraphParams&) const = default;
};

/// Check every constraint and either return validated params or throw an
/// InvalidParamsError that lists every violated constraint.
GraphParams validate_params(const RawParams& raw);

/// Same checks, reporting violations instead of throwing. Empty means valid.
std::vector<ParamViolation> check_params(const RawParams& raw);

/// Human-readable warnings that do not prevent construction (e.g. d < 7).
std::vector<std::string> param_warnings(const GraphParams& p);

/// Largest label space we support; labels, sentinels and N_aux must fit in 63 bits.
inline constexpr int kMaxLabelBits = 62;

}  // namespace sunflower
