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

#include <bit>
#include <limits>

namespace sunflower {

namespace {

// Saturating power; returns nullopt past 2^62.
std::optional<std::uint64_t> checked_pow(std::uint64_t base, int exp) {
  constexpr std::uint64_t kLimit = std::uint64_t{1} << kMaxLabelBits;
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && r > kLimit / base) return std::nullopt;
    r *= base;
  }
  return r;
}

std::uint64_t ipow(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

std::string join_violations(const std::vector<ParamViolation>& v) {
  std::string out = "invalid parameters:";
  for (auto x : v) {
    out += ' ';
    out += violation_name(x);
  }
  return out;
}

}  // namespace

std::string_view violation_name(ParamViolation v) {
  switch (v) {
    case ParamViolation::DegreeTooSmall: return "DegreeTooSmall";
    case ParamViolation::EvenDegree: return "EvenDegree";
    case ParamViolation::HeightTooSmall: return "HeightTooSmall";
    case ParamViolation::EvenHeight: return "EvenHeight";
    case ParamViolation::TreeCountTooSmall: return "TreeCountTooSmall";
    case ParamViolation::TreeCountNotMultipleOf4: return "TreeCountNotMultipleOf4";
    case ParamViolation::NegativeAuxCount: return "NegativeAuxCount";
    case ParamViolation::InstanceTooLarge: return "InstanceTooLarge";
  }
  return "Unknown";
}

InvalidParamsError::InvalidParamsError(std::vector<ParamViolation> violations)
    : Error(ErrorCode::InvalidParams, join_violations(violations)),
      violations_(std::move(violations)) {}

std::vector<ParamViolation> check_params(const RawParams& raw) {
  std::vector<ParamViolation> out;
  if (raw.d < 3) out.push_back(ParamViolation::DegreeTooSmall);
  if (raw.d % 2 == 0) out.push_back(ParamViolation::EvenDegree);
  if (raw.m < 3) out.push_back(ParamViolation::HeightTooSmall);
  if (raw.m % 2 == 0) out.push_back(ParamViolation::EvenHeight);
  if (raw.n < 4) out.push_back(ParamViolation::TreeCountTooSmall);
  if (raw.n % 4 != 0) out.push_back(ParamViolation::TreeCountNotMultipleOf4);
  if (raw.n_aux < 0) out.push_back(ParamViolation::NegativeAuxCount);
  if (out.empty()) {
    // Labels plus the k + 2^bits sentinels must fit comfortably in 64 bits.
    constexpr std::uint64_t kLimit = std::uint64_t{1} << kMaxLabelBits;
    auto per_tree = checked_pow(static_cast<std::uint64_t>(raw.d - 1), static_cast<int>(raw.m - 1));
    bool too_large = !per_tree || raw.n > 1 << 20 || *per_tree > kLimit / static_cast<std::uint64_t>(raw.n);
    if (!too_large) {
      std::uint64_t ng = *per_tree * static_cast<std::uint64_t>(raw.n);
      too_large = static_cast<std::uint64_t>(raw.n_aux) > kLimit - ng;
    }
    if (too_large) out.push_back(ParamViolation::InstanceTooLarge);
  }
  return out;
}

GraphParams validate_params(const RawParams& raw) {
  auto violations = check_params(raw);
  if (!violations.empty()) throw InvalidParamsError(std::move(violations));
  GraphParams p;
  p.d = static_cast<int>(raw.d);
  p.m = static_cast<int>(raw.m);
  p.n = static_cast<int>(raw.n);
  p.n_aux = static_cast<std::uint64_t>(raw.n_aux);
  p.seed = raw.seed;
  return p;
}

std::vector<std::string> param_warnings(const GraphParams& p) {
  std::vector<std::string> out;
  if (!p.expansion_guaranteed()) {
    out.push_back("d = " + std::to_string(p.d) +
                  ": the mild-expander guarantee is only proven for d >= 7");
  }
  return out;
}

std::uint64_t GraphParams::layer_size(int layer) const {
  if (layer == 1) return 1;
  return static_cast<std::uint64_t>(d - 2) * ipow(d - 1, layer - 2);
}

std::uint64_t GraphParams::layer_offset(int layer) const {
  // 1 + (d-2) * sum_{k<layer-2} (d-1)^k telescopes to (d-1)^(layer-2).
  if (layer == 1) return 0;
  return ipow(d - 1, layer - 2);
}

std::uint64_t GraphParams::vertices_per_tree() const { return ipow(d - 1, m - 1); }

std::uint64_t GraphParams::graph_vertex_count() const {
  return static_cast<std::uint64_t>(n) * vertices_per_tree();
}

int GraphParams::label_bits() const {
  const std::uint64_t total = total_vertex_count();
  return total <= 1 ? 0 : static_cast<int>(std::bit_width(total - 1));
}

}  // namespace sunflower
