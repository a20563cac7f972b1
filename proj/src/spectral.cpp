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

#include "sunflower/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <numbers>

#include <Eigen/Eigenvalues>

namespace sunflower {

namespace {

// cos and sin of 2 pi q / n with exact values on the quarter turns.
double exact_cos(long q, int n) {
  q %= n;
  if ((4 * q) % n == 0) {
    switch ((4 * q) / n) {
      case 0: return 1.0;
      case 1: return 0.0;
      case 2: return -1.0;
      default: return 0.0;
    }
  }
  return std::cos(2.0 * std::numbers::pi * static_cast<double>(q) / n);
}

// sin(x) = cos(x - pi/2); n is a multiple of 4 so the shift is a whole index.
double exact_sin(long q, int n) { return exact_cos(q % n + n - n / 4, n); }

long double t_sq(const GraphParams& p, int k) { return k == 1 ? p.d - 2 : p.d - 1; }

}  // namespace

double cycle_eigenvalue(int l, int n) { return 2.0 * exact_cos(l, n); }

CycleMode cycle_mode(int l, int n) {
  CycleMode c;
  c.l = l;
  c.mu = cycle_eigenvalue(l, n);
  c.phi.resize(n);
  const double s_full = 1.0 / std::sqrt(static_cast<double>(n));
  const double s_half = std::sqrt(2.0 / n);
  for (int i = 1; i <= n; ++i) {
    double v;
    if (l == n) {
      v = s_full;
    } else if (2 * l == n) {
      v = (i % 2 == 0 ? 1.0 : -1.0) * s_full;
    } else if (2 * l < n) {
      v = s_half * exact_cos(static_cast<long>(l) * i, n);
    } else {
      v = s_half * exact_sin(static_cast<long>(n - l) * i, n);
    }
    c.phi[i - 1] = v;
  }
  return c;
}

Eigen::MatrixXd h1_matrix(double a, double b, const GraphParams& p) {
  const int m = p.m;
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(m, m);
  M(0, 0) = a;
  M(m - 1, m - 1) += b;
  for (int k = 1; k < m; ++k) {
    const double t = std::sqrt(static_cast<double>(t_sq(p, k)));
    M(k - 1, k) = t;
    M(k, k - 1) = t;
  }
  return M;
}

PathModes path_modes(double a, double b, const GraphParams& p) {
  const int m = p.m;
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(m);
  Eigen::VectorXd sub(m - 1);
  diag[0] = a;
  diag[m - 1] += b;
  for (int k = 1; k < m; ++k) sub[k - 1] = std::sqrt(static_cast<double>(t_sq(p, k)));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  return {a, b, es.eigenvalues(), es.eigenvectors()};
}

std::vector<long double> h1_determinant_sequence(double a, double b, const GraphParams& p) {
  const int m = p.m;
  std::vector<long double> beta(m + 1);
  beta[0] = 1.0L;
  beta[1] = a;
  for (int k = 2; k <= m; ++k) {
    const long double c = k == m ? static_cast<long double>(b) : 0.0L;
    beta[k] = c * beta[k - 1] - t_sq(p, k - 1) * beta[k - 2];
  }
  return beta;
}

long double h1_determinant(double a, double b, const GraphParams& p) { return h1_determinant_sequence(a, b, p).back(); }

Eigen::MatrixXd h1_inverse(double a, double b, const GraphParams& p) {
  if (a == 0.0) throw Error(ErrorCode::SingularMatrix, "H1(a, b) is singular at a = 0");
  const int m = p.m;
  // 1-based vectors; sigma runs bottom-up, delta top-down.
  std::vector<long double> sigma(m + 2, 1.0L), delta(m + 2, 1.0L), t(m + 1, 0.0L);
  for (int k = 1; k < m; ++k) t[k] = std::sqrt(t_sq(p, k));
  auto diag = [&](int k) -> long double { return k == 1 ? a : (k == m ? b : 0.0L); };
  auto check = [](long double v) {
    if (v == 0.0L) throw Error(ErrorCode::RecursionBreakdown, "tridiagonal inverse recursion hit a zero pivot");
  };
  sigma[m] = diag(m);
  check(sigma[m]);
  for (int k = m - 1; k >= 1; --k) {
    sigma[k] = diag(k) - t[k] * t[k] / sigma[k + 1];
    check(sigma[k]);
  }
  delta[1] = diag(1);
  for (int k = 2; k <= m; ++k) {
    delta[k] = diag(k) - t[k - 1] * t[k - 1] / delta[k - 1];
    check(delta[k]);
  }
  // Suffix products: sig_tail[k] = sigma_k ... sigma_m, del_tail[k] = delta_k ... delta_m.
  std::vector<long double> sig_tail(m + 2, 1.0L), del_tail(m + 2, 1.0L);
  for (int k = m; k >= 1; --k) {
    sig_tail[k] = sig_tail[k + 1] * sigma[k];
    del_tail[k] = del_tail[k + 1] * delta[k];
  }
  Eigen::MatrixXd inv(m, m);
  for (int i = 1; i <= m; ++i) {
    long double tprod = 1.0L;  // t_i ... t_{j-1}
    for (int j = i; j <= m; ++j) {
      if (j > i) tprod *= t[j - 1];
      const long double sign = ((i + j) % 2 == 0) ? 1.0L : -1.0L;
      const long double v = sign * tprod * sig_tail[j + 1] / del_tail[i];
      inv(i - 1, j - 1) = static_cast<double>(v);
      inv(j - 1, i - 1) = static_cast<double>(v);
    }
  }
  return inv;
}

ZeroModes zero_modes(const GraphParams& p) {
  const int m = p.m, n = p.n;
  ZeroModes z;
  z.psi1_sq = 1.0 / (1.0 + static_cast<double>(p.d - 2) * (m - 1) / (2.0 * (p.d - 1)));
  z.psi = Eigen::VectorXd::Zero(m);
  // Odd entries follow Psi_{2k+1} = -(t_{2k-1}/t_{2k}) Psi_{2k-1}; even entries vanish.
  double v = std::sqrt(z.psi1_sq);
  z.psi[0] = v;
  for (int j = 3; j <= m; j += 2) {
    v *= -std::sqrt(static_cast<double>(t_sq(p, j - 2)) / static_cast<double>(t_sq(p, j - 1)));
    z.psi[j - 1] = v;
  }
  z.phi_cos = cycle_mode(n / 4, n).phi;
  z.phi_sin = cycle_mode(3 * n / 4, n).phi;
  z.eta_odd = Eigen::VectorXd(m * n);
  z.eta_even = Eigen::VectorXd(m * n);
  for (int j = 0; j < m; ++j) {
    for (int i = 0; i < n; ++i) {
      z.eta_odd[j * n + i] = z.psi[j] * z.phi_sin[i];
      z.eta_even[j * n + i] = z.psi[j] * z.phi_cos[i];
    }
  }
  return z;
}

double start_overlap_sq(const GraphParams& p) { return zero_modes(p).psi1_sq * 2.0 / p.n; }

std::vector<double> SpectrumReport::sorted_eigenvalues() const {
  std::vector<double> out;
  out.reserve(pairs.size());
  for (const auto& e : pairs) out.push_back(e.lambda);
  std::sort(out.begin(), out.end());
  return out;
}

Eigen::MatrixXd SpectrumReport::pi0() const {
  return zero.eta_odd * zero.eta_odd.transpose() + zero.eta_even * zero.eta_even.transpose();
}

SpectrumReport factor_spectrum(const EffectiveHamiltonian& H, bool with_vectors) {
  const GraphParams& p = H.params;
  const int m = p.m, n = p.n;
  SpectrumReport r;
  r.params = p;
  r.zero = zero_modes(p);
  r.pairs.reserve(static_cast<std::size_t>(m) * n);
  if (with_vectors) r.vectors.resize(m * n, m * n);
  r.delta = std::numeric_limits<double>::infinity();
  const int zero_j = (m + 1) / 2;  // middle of a spectrum symmetric about 0
  for (int l = 1; l <= n; ++l) {
    const CycleMode cm = cycle_mode(l, n);
    const PathModes pm = path_modes(cm.mu, H.gamma * cm.mu, p);
    for (int j = 1; j <= m; ++j) {
      Eigenpair e{l, j, cm.mu, pm.lambda[j - 1], cm.mu == 0.0 && j == zero_j};
      if (!e.zero_mode) r.delta = std::min(r.delta, std::abs(e.lambda));
      if (with_vectors) {
        const int col = static_cast<int>(r.pairs.size());
        for (int jj = 0; jj < m; ++jj) {
          r.vectors.col(col).segment(jj * n, n) = pm.psi(jj, j - 1) * cm.phi;
        }
      }
      r.pairs.push_back(e);
    }
  }
  return r;
}

GapReport spectral_gap(const SpectrumReport& report) {
  const auto& p = report.params;
  return {report.delta, report.delta * p.m * static_cast<double>(p.n) * p.n};
}

RootOverlaps overlaps(const SpectrumReport& report) {
  const int n = report.params.n;
  RootOverlaps o;
  for (int i = 0; i < n; ++i) {
    o.odd.push_back(std::abs(report.zero.eta_odd[i]));
    o.even.push_back(std::abs(report.zero.eta_even[i]));
  }
  return o;
}

double inf_norm_bound(const Eigen::MatrixXd& M) { return M.cwiseAbs().rowwise().sum().maxCoeff(); }

double d1_min_nonzero(const GraphParams& p) {
  const PathModes pm = path_modes(0.0, 0.0, p);
  double best = std::numeric_limits<double>::infinity();
  for (int j = 0; j < p.m; ++j) {
    if (j == (p.m - 1) / 2) continue;  // the single zero eigenvalue
    best = std::min(best, std::abs(pm.lambda[j]));
  }
  return best;
}

void write_spectrum_csv(const SpectrumReport& report, const EffectiveHamiltonian& H, std::ostream& out) {
  out << "l,j,mu_l,lambda,residual\n" << std::setprecision(17);
  for (std::size_t c = 0; c < report.pairs.size(); ++c) {
    const auto& e = report.pairs[c];
    double residual = std::nan("");
    if (report.vectors.size() > 0) {
      residual = (H.dense * report.vectors.col(c) - e.lambda * report.vectors.col(c)).norm();
    }
    out << e.l << ',' << e.j << ',' << e.mu << ',' << e.lambda << ',' << residual << '\n';
  }
}

}  // namespace sunflower
