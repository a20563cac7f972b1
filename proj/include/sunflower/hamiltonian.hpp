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
#include <ostream>
#include <vector>

#include <Eigen/Dense>

#include "sunflower/graph.hpp"
#include "sunflower/params.hpp"

namespace sunflower {

/// Restriction of the adjacency matrix to the span of supervertex states.
///
/// Row and column (j-1)*n + (i-1) hold supervertex (i, j), with 1-based tree i
/// and layer j. Structured form: H = (e1 e1^T + gamma em em^T) (x) D0 + D1 (x) I,
/// where D0 is the n-cycle adjacency and D1 the weighted path with weights t.
struct EffectiveHamiltonian {
  GraphParams params;
  std::vector<double> t;  // t[0] = t_1 = sqrt(d-2), then sqrt(d-1); size m-1
  double gamma = 1.0;     // (d-1)/2
  Eigen::MatrixXd dense;

  int dim() const { return params.m * params.n; }
  int index(int i, int j) const { return (j - 1) * params.n + (i - 1); }

  Eigen::MatrixXd D0() const;
  Eigen::MatrixXd D1() const;

  /// Matrix-free product using only the structured form.
  Eigen::VectorXd apply(const Eigen::VectorXd& x) const;
};

/// H depends on (d, m, n) only; the seed and padding in `params` are ignored.
EffectiveHamiltonian build_H(const GraphParams& params);

/// Embed a coefficient vector over supervertices into the full graph-vertex
/// space (indexed by structural vertex index).
Eigen::VectorXd embed(const SunflowerGraph& g, const Eigen::VectorXd& x);

/// Full-space adjacency product A*v over graph vertex indices (explicit backend).
Eigen::VectorXd adjacency_apply(const SunflowerGraph& g, const Eigen::VectorXd& v);

/// Max of ||A V x - V H x|| / ||x|| over Gaussian x drawn from `seed`.
double verify_invariance(const SunflowerGraph& g, const EffectiveHamiltonian& H, int trials,
                         std::uint64_t seed);
/// Same residual for one given coefficient vector.
double invariance_residual(const SunflowerGraph& g, const EffectiveHamiltonian& H, const Eigen::VectorXd& x);

/// Max over k = 0..k_max of ||(A/d)^k V e_s - V (H/d)^k e_s||. Both sides are
/// scaled by the degree so the residual is an absolute error on unit-scale
/// vectors; unscaled powers grow like d^k and swamp double precision.
double verify_restriction(const SunflowerGraph& g, const EffectiveHamiltonian& H, int k_max);
std::vector<double> restriction_residuals(const SunflowerGraph& g, const EffectiveHamiltonian& H, int k_max);

/// Coordinate triplets "row col value" (1-based), nonzeros only, with a size header.
void write_triplets(const EffectiveHamiltonian& H, std::ostream& out);

}  // namespace sunflower
