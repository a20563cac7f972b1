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

#include "sunflower/filtering.hpp"

#include <cmath>
#include <limits>

namespace sunflower {

namespace {

void check_delta(double delta) {
  if (!(delta > 0.0) || delta > kMaxFilterDelta * (1.0 + 1e-12)) {
    throw Error(ErrorCode::DomainError, "filter delta must lie in (0, 1/sqrt(12)]");
  }
}

// acosh(1 + z) for z >= 0 without cancellation near z = 0.
double acosh1p(double z) { return std::log1p(z + std::sqrt(z * (2.0 + z))); }

// 1 / cosh(w) for w >= 0, safe for large w.
double sech(double w) {
  const double e = std::exp(-w);
  return 2.0 * e / (1.0 + e * e);
}

}  // namespace

double FilterSpec::bound() const { return 2.0 * std::exp(-std::sqrt(2.0) * ell * delta); }

double filter_delta(double gap, double alpha) { return std::min(gap / alpha, kMaxFilterDelta); }

int choose_degree(double gap, double alpha, double eps) {
  if (!(gap > 0.0)) throw Error(ErrorCode::NonpositiveGap, "spectral gap must be positive");
  if (!(eps > 0.0 && eps < 1.0)) throw Error(ErrorCode::DomainError, "filter error must lie in (0, 1)");
  const double delta = filter_delta(gap, alpha);
  const double raw = std::log(2.0 / eps) / (std::sqrt(2.0) * delta);
  // Absorb roundoff so that an exactly saturated bound does not round up.
  const double ell = std::ceil(raw * (1.0 - 4.0 * std::numeric_limits<double>::epsilon()));
  return std::max(1, static_cast<int>(ell));
}

FilterSpec make_filter_spec(double gap, const GraphParams& p, double eps, double alpha, double eps_a,
                            double eps_prime) {
  FilterSpec s;
  s.alpha = alpha > 0.0 ? alpha : static_cast<double>(p.d) * p.d;
  s.eps = eps;
  s.ell = choose_degree(gap, s.alpha, eps);
  s.delta = filter_delta(gap, s.alpha);
  s.eps_a = eps_a;
  s.eps_prime = eps_prime > 0.0 ? eps_prime : 1.0 / (4.0 * p.m * p.n);
  return s;
}

double chebyshev_t(int ell, double y) {
  if (std::abs(y) <= 1.0) return std::cos(ell * std::acos(y));
  const double v = std::cosh(ell * std::acosh(std::abs(y)));
  return (y < 0 && ell % 2 == 1) ? -v : v;
}

double chebyshev_t_recurrence(int ell, double y) {
  if (ell == 0) return 1.0;
  double prev = 1.0, cur = y;
  for (int k = 1; k < ell; ++k) {
    const double next = 2.0 * y * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double eval_R(double x, int ell, double delta) {
  if (!(std::abs(x) <= 1.0)) throw Error(ErrorCode::DomainError, "eval_R requires |x| <= 1");
  check_delta(delta);
  const double d2 = delta * delta;
  const double u0 = acosh1p(2.0 * d2 / (1.0 - d2));
  const double ax = std::abs(x);
  if (ax >= delta) {
    // y = cos(theta) with theta = 2 atan2(sqrt(1 - x^2), sqrt(x^2 - delta^2)).
    const double theta = 2.0 * std::atan2(std::sqrt((1.0 - ax) * (1.0 + ax)), std::sqrt((ax - delta) * (ax + delta)));
    const double num = std::cos(ell * theta);
    return (ell % 2 == 0 ? num : -num) * sech(ell * u0);
  }
  // Both numerator and denominator lie left of -1; signs cancel.
  const double u = acosh1p(2.0 * (delta - ax) * (delta + ax) / (1.0 - d2));
  const double lu = ell * u, lu0 = ell * u0;
  return std::exp(lu - lu0) * (1.0 + std::exp(-2.0 * lu)) / (1.0 + std::exp(-2.0 * lu0));
}

double eval_R_recurrence(double x, int ell, double delta) {
  const double d2 = delta * delta;
  const double y = -1.0 + 2.0 * (x * x - d2) / (1.0 - d2);
  const double y0 = -1.0 - 2.0 * d2 / (1.0 - d2);
  return chebyshev_t_recurrence(ell, y) / chebyshev_t_recurrence(ell, y0);
}

Eigen::VectorXd apply_filter(const EffectiveHamiltonian& H, const FilterSpec& spec, const Eigen::VectorXd& x) {
  check_delta(spec.delta);
  if (spec.ell < 1) throw Error(ErrorCode::DomainError, "filter degree must be positive");
  const double d2 = spec.delta * spec.delta;
  const double y0 = -1.0 - 2.0 * d2 / (1.0 - d2);
  const double c2 = 2.0 / (spec.alpha * spec.alpha * (1.0 - d2));
  // Y = y0 I + c2 H^2 is the shifted argument of T_ell.
  auto Y = [&](const Eigen::VectorXd& v) -> Eigen::VectorXd { return y0 * v + c2 * H.apply(H.apply(v)); };

  // w_k = T_k(Y) x / T_k(y0); r = T_{k-1}(y0) / T_k(y0) stays bounded by 1.
  Eigen::VectorXd prev = x;
  Eigen::VectorXd cur = Y(x) / y0;
  double r = 1.0 / y0;
  for (int k = 1; k < spec.ell; ++k) {
    const double step = 1.0 / (2.0 * y0 - r);
    Eigen::VectorXd next = (2.0 * Y(cur) - r * prev) * step;
    prev = std::move(cur);
    cur = std::move(next);
    r = step;
  }
  return cur;
}

Eigen::VectorXd apply_filter(const EffectiveHamiltonian& H, const FilterSpec& spec) {
  Eigen::VectorXd e = Eigen::VectorXd::Zero(H.dim());
  e[H.index(1, 1)] = 1.0;
  return apply_filter(H, spec, e);
}

double robustness_bound(int ell, double eps_a, double alpha) {
  if (!(eps_a > 0.0)) throw Error(ErrorCode::DomainError, "eps_a must be positive");
  const double bracket = std::log(2.0 * alpha / eps_a + 1.0) + 1.0;
  return 16.0 * static_cast<double>(ell) * ell * eps_a / alpha * bracket * bracket;
}

}  // namespace sunflower
