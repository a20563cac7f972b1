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

#include <cmath>

#include <Eigen/Dense>

#include "sunflower/hamiltonian.hpp"

namespace sunflower {

inline const double kMaxFilterDelta = 1.0 / std::sqrt(12.0);

/// Eigenstate filter parameters. The filter R_ell(H/alpha; delta) has degree
/// 2*ell, fixes the zero eigenspace and damps |lambda| >= delta*alpha to at most
/// 2 exp(-sqrt(2) ell delta). eps_a and eps_prime are carried for the error and
/// query budgets only; no inexact block encoding is simulated.
struct FilterSpec {
  int ell = 1;
  double delta = kMaxFilterDelta;
  double alpha = 9.0;
  double eps = 1e-3;
  double eps_a = 1e-12;
  double eps_prime = 1e-2;

  /// 2 exp(-sqrt(2) ell delta).
  double bound() const;
};

/// min(gap / alpha, 1/sqrt(12)).
double filter_delta(double gap, double alpha);

/// Smallest ell with 2 exp(-sqrt(2) ell delta) <= eps. Throws NonpositiveGap if
/// gap <= 0 and DomainError unless 0 < eps < 1.
int choose_degree(double gap, double alpha, double eps);

/// Spec for an instance: alpha defaults to d^2 when `alpha` <= 0.
FilterSpec make_filter_spec(double gap, const GraphParams& p, double eps, double alpha = 0.0,
                            double eps_a = 1e-12, double eps_prime = -1.0);

/// T_ell(y): cos(ell acos y) inside [-1, 1], sign(y)^ell cosh(ell acosh |y|) outside.
double chebyshev_t(int ell, double y);
double chebyshev_t_recurrence(int ell, double y);

/// R_ell(x; delta) = T_ell(-1 + 2(x^2 - delta^2)/(1 - delta^2)) / T_ell(-1 - 2 delta^2/(1 - delta^2)).
/// Evaluated through half-angle and log-space forms so it neither overflows nor
/// loses digits near x = +-delta or x = +-1. Throws DomainError for |x| > 1.
double eval_R(double x, int ell, double delta);
/// The same ratio from the plain three-term recurrence; a cross-check only.
double eval_R_recurrence(double x, int ell, double delta);

/// R_ell(H/alpha; delta) x through a rescaled three-term recurrence on vectors.
/// Each step costs two structured products with H; no matrix powers are formed.
Eigen::VectorXd apply_filter(const EffectiveHamiltonian& H, const FilterSpec& spec, const Eigen::VectorXd& x);
/// Filter applied to the start state e_s (supervertex (1, 1)).
Eigen::VectorXd apply_filter(const EffectiveHamiltonian& H, const FilterSpec& spec);

/// 16 ell^2 eps_a / alpha * (ln(2 alpha / eps_a + 1) + 1)^2, natural log.
double robustness_bound(int ell, double eps_a, double alpha);

}  // namespace sunflower
