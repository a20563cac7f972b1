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

#include "sunflower/hamiltonian.hpp"

#include <cmath>
#include <iomanip>

#include "sunflower/rng.hpp"

namespace sunflower {

Eigen::MatrixXd EffectiveHamiltonian::D0() const {
  const int n = params.n;
  Eigen::MatrixXd d0 = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    d0(i, (i + 1) % n) = 1.0;
    d0((i + 1) % n, i) = 1.0;
  }
  return d0;
}

Eigen::MatrixXd EffectiveHamiltonian::D1() const {
  const int m = params.m;
  Eigen::MatrixXd d1 = Eigen::MatrixXd::Zero(m, m);
  for (int j = 0; j + 1 < m; ++j) {
    d1(j, j + 1) = t[j];
    d1(j + 1, j) = t[j];
  }
  return d1;
}

EffectiveHamiltonian build_H(const GraphParams& params) {
  EffectiveHamiltonian H;
  H.params = params;
  const int d = params.d, m = params.m, n = params.n;
  H.t.assign(m - 1, std::sqrt(static_cast<double>(d - 1)));
  H.t[0] = std::sqrt(static_cast<double>(d - 2));
  H.gamma = (d - 1) / 2.0;

  H.dense = Eigen::MatrixXd::Zero(m * n, m * n);
  auto set = [&](int r, int c, double v) {
    H.dense(r, c) = v;
    H.dense(c, r) = v;
  };
  for (int i = 1; i <= n; ++i) {
    const int next = i % n + 1;
    set(H.index(i, 1), H.index(next, 1), 1.0);
    set(H.index(i, m), H.index(next, m), H.gamma);
    for (int j = 1; j < m; ++j) set(H.index(i, j), H.index(i, j + 1), H.t[j - 1]);
  }
  return H;
}

Eigen::VectorXd EffectiveHamiltonian::apply(const Eigen::VectorXd& x) const {
  const int m = params.m, n = params.n;
  Eigen::VectorXd y = Eigen::VectorXd::Zero(dim());
  for (int i = 0; i < n; ++i) {
    const int prev = (i + n - 1) % n, next = (i + 1) % n;
    y[i] += x[prev] + x[next];
    const int base = (m - 1) * n;
    y[base + i] += gamma * (x[base + prev] + x[base + next]);
  }
  for (int j = 0; j + 1 < m; ++j) {
    for (int i = 0; i < n; ++i) {
      y[j * n + i] += t[j] * x[(j + 1) * n + i];
      y[(j + 1) * n + i] += t[j] * x[j * n + i];
    }
  }
  return y;
}

Eigen::VectorXd embed(const SunflowerGraph& g, const Eigen::VectorXd& x) {
  const auto& p = g.params();
  const std::uint64_t ng = p.graph_vertex_count();
  std::vector<double> inv_sqrt(p.m + 1);
  for (int j = 1; j <= p.m; ++j) inv_sqrt[j] = 1.0 / std::sqrt(static_cast<double>(p.layer_size(j)));
  Eigen::VectorXd v(ng);
  for (std::uint64_t idx = 0; idx < ng; ++idx) {
    const VertexCoord c = g.coord_of_index(idx);
    v[idx] = x[(c.layer - 1) * p.n + (c.tree - 1)] * inv_sqrt[c.layer];
  }
  return v;
}

Eigen::VectorXd adjacency_apply(const SunflowerGraph& g, const Eigen::VectorXd& v) {
  const auto& off = g.csr_offsets();
  const auto& tgt = g.csr_targets();
  const std::uint64_t ng = g.params().graph_vertex_count();
  Eigen::VectorXd y(ng);
  for (std::uint64_t a = 0; a < ng; ++a) {
    double s = 0.0;
    for (std::uint64_t e = off[a]; e < off[a + 1]; ++e) s += v[tgt[e]];
    y[a] = s;
  }
  return y;
}

double invariance_residual(const SunflowerGraph& g, const EffectiveHamiltonian& H, const Eigen::VectorXd& x) {
  const Eigen::VectorXd lhs = adjacency_apply(g, embed(g, x));
  const Eigen::VectorXd rhs = embed(g, H.dense * x);
  return (lhs - rhs).norm() / x.norm();
}

double verify_invariance(const SunflowerGraph& g, const EffectiveHamiltonian& H, int trials, std::uint64_t seed) {
  g.csr_offsets();  // explicit backend check
  Rng rng(derive_key(seed, kTagSweep, 0x696e76));
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    Eigen::VectorXd x(H.dim());
    for (int r = 0; r < H.dim(); ++r) x[r] = normal01(rng);
    worst = std::max(worst, invariance_residual(g, H, x));
  }
  return worst;
}

std::vector<double> restriction_residuals(const SunflowerGraph& g, const EffectiveHamiltonian& H, int k_max) {
  g.csr_offsets();
  const double scale = 1.0 / H.params.d;
  Eigen::VectorXd x = Eigen::VectorXd::Zero(H.dim());
  x[H.index(1, 1)] = 1.0;
  Eigen::VectorXd full = embed(g, x);
  std::vector<double> out;
  out.push_back((full - embed(g, x)).norm());
  for (int k = 1; k <= k_max; ++k) {
    full = adjacency_apply(g, full) * scale;
    x = H.dense * x * scale;
    out.push_back((full - embed(g, x)).norm());
  }
  return out;
}

double verify_restriction(const SunflowerGraph& g, const EffectiveHamiltonian& H, int k_max) {
  const auto r = restriction_residuals(g, H, k_max);
  return *std::max_element(r.begin(), r.end());
}

void write_triplets(const EffectiveHamiltonian& H, std::ostream& out) {
  const int dim = H.dim();
  int nnz = 0;
  for (int c = 0; c < dim; ++c)
    for (int r = 0; r < dim; ++r) nnz += H.dense(r, c) != 0.0;
  out << "% effective Hamiltonian d=" << H.params.d << " m=" << H.params.m << " n=" << H.params.n << '\n';
  out << dim << ' ' << dim << ' ' << nnz << '\n';
  out << std::setprecision(17);
  for (int c = 0; c < dim; ++c)
    for (int r = 0; r < dim; ++r)
      if (H.dense(r, c) != 0.0) out << r + 1 << ' ' << c + 1 << ' ' << H.dense(r, c) << '\n';
}

}  // namespace sunflower
