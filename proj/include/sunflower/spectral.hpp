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

#include <ostream>
#include <vector>

#include <Eigen/Dense>

#include "sunflower/hamiltonian.hpp"

namespace sunflower {

/// 2 cos(2 pi l / n), exact (0, +-2) whenever 4l is a multiple of n.
double cycle_eigenvalue(int l, int n);

/// Eigenpair of the n-cycle adjacency D0, l = 1..n. The real basis uses
/// cos(2 pi l i / n) for l < n/2 and sin(2 pi (n-l) i / n) for l > n/2, so the two
/// zero modes are phi_{n/4} = cos(i pi/2)/sqrt(n/2) and phi_{3n/4} = sin(i pi/2)/sqrt(n/2).
struct CycleMode {
  int l = 0;
  double mu = 0.0;
  Eigen::VectorXd phi;
};
CycleMode cycle_mode(int l, int n);

/// The m x m weighted path with boundary diagonal entries a (top) and b (bottom).
Eigen::MatrixXd h1_matrix(double a, double b, const GraphParams& p);

/// Eigenvalues ascending and eigenvectors (columns) of H1(a, b).
struct PathModes {
  double a = 0.0, b = 0.0;
  Eigen::VectorXd lambda;
  Eigen::MatrixXd psi;
};
PathModes path_modes(double a, double b, const GraphParams& p);

/// beta_0 .. beta_m of the three-term determinant recursion.
std::vector<long double> h1_determinant_sequence(double a, double b, const GraphParams& p);
long double h1_determinant(double a, double b, const GraphParams& p);

/// Closed-form inverse from the forward (delta) and backward (sigma) ratio
/// recursions. Throws SingularMatrix when a == 0 and RecursionBreakdown if a
/// ratio vanishes for any other reason.
Eigen::MatrixXd h1_inverse(double a, double b, const GraphParams& p);

/// The two zero modes of H in closed form. psi is the zero mode of D1; the cycle
/// factors are named after their trig function to avoid any parity ambiguity.
/// eta_odd = psi (x) phi_sin is the mode supported on odd-indexed trees, and so
/// the one that overlaps the start root; eta_even = psi (x) phi_cos.
struct ZeroModes {
  Eigen::VectorXd psi;
  Eigen::VectorXd phi_cos;
  Eigen::VectorXd phi_sin;
  Eigen::VectorXd eta_odd;
  Eigen::VectorXd eta_even;
  double psi1_sq = 0.0;  // 1 / (1 + (d-2)(m-1) / (2(d-1)))
};
ZeroModes zero_modes(const GraphParams& p);

/// ||Pi0 e_s||^2 = |Psi_1|^2 * 2/n.
double start_overlap_sq(const GraphParams& p);

struct Eigenpair {
  int l = 0;  // cycle index 1..n
  int j = 0;  // position in the ascending spectrum of H1(mu_l, gamma mu_l), 1..m
  double mu = 0.0;
  double lambda = 0.0;
  bool zero_mode = false;
};

struct SpectrumReport {
  GraphParams params;
  std::vector<Eigenpair> pairs;  // l-major
  Eigen::MatrixXd vectors;       // column c belongs to pairs[c]; empty if not requested
  ZeroModes zero;
  double delta = 0.0;            // smallest |lambda| over non-zero modes

  std::vector<double> sorted_eigenvalues() const;
  /// Rank-2 projector eta_odd eta_odd^T + eta_even eta_even^T.
  Eigen::MatrixXd pi0() const;
};

SpectrumReport factor_spectrum(const EffectiveHamiltonian& H, bool with_vectors = true);

struct GapReport {
  double delta = 0.0;
  double normalized = 0.0;  // delta * m * n^2
};
GapReport spectral_gap(const SpectrumReport& report);

/// |<eta_odd|S_{i,1}>| and |<eta_even|S_{i,1}>| for i = 1..n (index i-1).
struct RootOverlaps {
  std::vector<double> odd;
  std::vector<double> even;
};
RootOverlaps overlaps(const SpectrumReport& report);

/// Max absolute row sum; an upper bound on the spectral norm of a symmetric matrix.
double inf_norm_bound(const Eigen::MatrixXd& M);

/// Smallest nonzero |eigenvalue| of D1 (exactly one eigenvalue is zero for odd m).
double d1_min_nonzero(const GraphParams& p);

/// CSV: l,j,mu_l,lambda,residual with the residual against the dense H.
void write_spectrum_csv(const SpectrumReport& report, const EffectiveHamiltonian& H, std::ostream& out);

}  // namespace sunflower
