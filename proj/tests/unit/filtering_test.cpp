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

#include <gtest/gtest.h>

#include "sunflower/errors.hpp"
#include "sunflower/spectral.hpp"

namespace sunflower {
namespace {

GraphParams P(int d, int m, int n) { return validate_params({d, m, n, 0, 1}); }

TEST(Filtering, DegreeSelection) {
  // Even at the largest delta a single step only reaches 2 exp(-sqrt(2)/sqrt(12)) > 1,
  // so every admissible eps needs ell >= 2 at full delta and the floor of 1 only
  // shows up through the max().
  const double dmax = kMaxFilterDelta;
  EXPECT_GT(2 * std::exp(-std::sqrt(2.0) * dmax), 1.0);
  EXPECT_EQ(choose_degree(1.0, 1.0, 0.999), 2);
  EXPECT_EQ(choose_degree(1.0, 1.0, 2 * std::exp(-std::sqrt(2.0) * 2 * dmax)), 2);
  EXPECT_EQ(choose_degree(9.0, 9.0, 1e-3), 19);
  EXPECT_EQ(choose_degree(100.0, 9.0, 1e-3), 19);
  for (double gap : {0.01, 0.1, 1.0}) {
    const double eps = 1e-4;
    const int a = choose_degree(gap, 9.0, eps), b = choose_degree(gap, 9.0, eps / 2);
    const double delta = filter_delta(gap, 9.0);
    EXPECT_LE(2 * std::exp(-std::sqrt(2.0) * a * delta), eps);
    EXPECT_GT(2 * std::exp(-std::sqrt(2.0) * (a - 1) * delta), eps);
    EXPECT_GE(b, a);
    EXPECT_LE(b - a, static_cast<int>(std::ceil(std::log(2.0) / (std::sqrt(2.0) * delta))));
  }
}

TEST(Filtering, DegreeSelectionErrors) {
  try {
    choose_degree(0.0, 9.0, 1e-3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonpositiveGap);
  }
  try {
    choose_degree(1.0, 9.0, 1.5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DomainError);
  }
}

TEST(Filtering, SpecDefaults) {
  const GraphParams p = P(3, 5, 8);
  const FilterSpec s = make_filter_spec(0.2, p, 1e-3);
  EXPECT_EQ(s.alpha, 9.0);
  EXPECT_NEAR(s.delta, 0.2 / 9.0, 1e-16);
  EXPECT_NEAR(s.eps_prime, 1.0 / 160.0, 1e-16);
  EXPECT_LE(s.bound(), 1e-3);
}

TEST(Filtering, KnownValues) {
  for (int ell : {1, 5, 50, 200}) EXPECT_EQ(eval_R(0.0, ell, 0.1), 1.0);
  EXPECT_NEAR(eval_R(1.0, 1, kMaxFilterDelta), -11.0 / 13.0, 1e-15);
  EXPECT_NEAR(eval_R(-1.0, 1, kMaxFilterDelta), -11.0 / 13.0, 1e-15);
  EXPECT_THROW(eval_R(1.0 + 1e-9, 3, 0.1), Error);
  EXPECT_NEAR(chebyshev_t(7, 0.3), chebyshev_t_recurrence(7, 0.3), 1e-14);
  EXPECT_NEAR(chebyshev_t(4, -1.5), chebyshev_t_recurrence(4, -1.5), 1e-12);
}

TEST(Filtering, BoundHoldsOnGrid) {
  for (double delta : {0.01, 0.1, kMaxFilterDelta}) {
    for (int ell = 1; ell <= 200; ++ell) {
      const double bound = 2 * std::exp(-std::sqrt(2.0) * ell * delta);
      double worst = 0.0;
      for (int k = 0; k <= 400; ++k) {
        const double x = delta + (1.0 - delta) * k / 400.0;
        worst = std::max(worst, std::abs(eval_R(x, ell, delta)));
      }
      EXPECT_LE(worst, bound * (1 + 1e-12)) << "ell=" << ell << " delta=" << delta;
      for (int k = 0; k <= 40; ++k) EXPECT_LE(std::abs(eval_R(-1.0 + k / 20.0, ell, delta)), 1.0 + 1e-12);
    }
  }
}

TEST(Filtering, ClosedFormMatchesRecurrence) {
  for (double delta : {0.05, kMaxFilterDelta}) {
    for (int ell = 1; ell <= 200; ell += 7) {
      for (int k = 0; k <= 100; ++k) {
        const double x = -1.0 + k / 50.0;
        const double a = eval_R(x, ell, delta), b = eval_R_recurrence(x, ell, delta);
        EXPECT_LE(std::abs(a - b), 1e-10 * std::max(std::abs(a), std::abs(b)) + 1e-13)
            << "x=" << x << " ell=" << ell;
      }
    }
  }
}

TEST(Filtering, ResidualToZeroProjection) {
  for (auto p : {P(3, 5, 8), P(5, 5, 8), P(3, 7, 12)}) {
    const EffectiveHamiltonian H = build_H(p);
    const SpectrumReport r = factor_spectrum(H);
    Eigen::VectorXd es = Eigen::VectorXd::Zero(H.dim());
    es[0] = 1.0;
    const Eigen::VectorXd target = r.pi0() * es;
    double prev = 1e300;
    for (int ell : {1, 10, 100, 400, 1600}) {
      FilterSpec s = make_filter_spec(r.delta, p, 0.5);
      s.ell = ell;
      const double res = (apply_filter(H, s) - target).norm();
      EXPECT_LE(res, s.bound() + 1e-9) << "ell=" << ell;
      EXPECT_LE(s.bound(), prev);
      prev = s.bound();
    }
  }
}

TEST(Filtering, ConvergesToStartOverlapWithOddSupport) {
  const GraphParams p = P(3, 5, 8);
  const EffectiveHamiltonian H = build_H(p);
  const double gap = factor_spectrum(H, false).delta;
  const FilterSpec s = make_filter_spec(gap, p, 1e-12);
  const Eigen::VectorXd v = apply_filter(H, s);
  EXPECT_NEAR(v.squaredNorm(), 1.0 / 8.0, 1e-10);
  for (int j = 1; j <= p.m; ++j)
    for (int i = 1; i <= p.n; ++i)
      if (i % 2 == 0 || j % 2 == 0) EXPECT_LE(std::abs(v[H.index(i, j)]), 1e-11);
}

TEST(Filtering, ParsevalInEigenbasis) {
  const GraphParams p = P(5, 5, 8);
  const EffectiveHamiltonian H = build_H(p);
  const SpectrumReport r = factor_spectrum(H);
  for (int ell : {1, 7, 40}) {
    FilterSpec s = make_filter_spec(r.delta, p, 0.5);
    s.ell = ell;
    double sum = 0.0;
    for (int c = 0; c < H.dim(); ++c) {
      const double f = eval_R(r.pairs[c].lambda / s.alpha, ell, s.delta);
      sum += f * f * r.vectors(0, c) * r.vectors(0, c);
    }
    EXPECT_NEAR(apply_filter(H, s).squaredNorm(), sum, 1e-10);
  }
}

TEST(Filtering, NearlyIdempotent) {
  const GraphParams p = P(3, 5, 8);
  const EffectiveHamiltonian H = build_H(p);
  const double gap = factor_spectrum(H, false).delta;
  for (int ell : {50, 200, 800}) {
    FilterSpec s = make_filter_spec(gap, p, 0.5);
    s.ell = ell;
    const Eigen::VectorXd once = apply_filter(H, s);
    const Eigen::VectorXd twice = apply_filter(H, s, once);
    const double change = (once.normalized() - twice.normalized()).norm();
    EXPECT_LE(change, 2 * s.bound() + 1e-12);
  }
}

TEST(Filtering, RobustnessBound) {
  const double want = 16e-6 / 9.0 * std::pow(std::log(2 * 9.0 / 1e-6 + 1) + 1, 2);
  EXPECT_NEAR(robustness_bound(1, 1e-6, 9.0), want, 1e-18);
  EXPECT_NEAR(robustness_bound(3, 1e-6, 9.0), 9 * want, 1e-16);
  EXPECT_LT(robustness_bound(1, 1e-300, 9.0), 1e-290);
}

}  // namespace
}  // namespace sunflower
