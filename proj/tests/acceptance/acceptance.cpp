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

// Acceptance driver: one PASS/FAIL line per criterion. Criteria listed with
// --expect-fail still print their honest verdict but do not change the exit code.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "sunflower/classical.hpp"
#include "sunflower/expansion.hpp"
#include "sunflower/filtering.hpp"
#include "sunflower/hamiltonian.hpp"
#include "sunflower/parallel.hpp"
#include "sunflower/qsim.hpp"
#include "sunflower/spectral.hpp"
#include "sunflower/stats.hpp"

using namespace sunflower;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::string fingerprint;  // every numeric output, hex-exact, for the determinism check
};

class Recorder {
 public:
  void num(double v) { fp_ << std::hexfloat << v << ' '; }
  void num(std::uint64_t v) { fp_ << v << ' '; }
  void check(bool ok, const std::string& what) {
    if (!ok) {
      pass_ = false;
      if (!failures_.empty()) failures_ += "; ";
      failures_ += what;
    }
  }
  void note(const std::string& s) {
    if (!notes_.empty()) notes_ += ", ";
    notes_ += s;
  }
  Outcome done() const { return {pass_, failures_.empty() ? notes_ : failures_ + " | " + notes_, fp_.str()}; }

 private:
  bool pass_ = true;
  std::string failures_, notes_;
  std::ostringstream fp_;
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

GraphParams P(int d, int m, int n, std::uint64_t seed = 2026, std::uint64_t naux = 0) {
  return validate_params({d, m, n, static_cast<std::int64_t>(naux), seed});
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome criterion1() {
  Recorder r;
  double worst_eig = 0.0, worst_res = 0.0;
  for (auto p : {P(3, 3, 4), P(3, 5, 8), P(5, 5, 8), P(7, 7, 12)}) {
    const EffectiveHamiltonian H = build_H(p);
    const SpectrumReport s = factor_spectrum(H);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(H.dense, Eigen::EigenvaluesOnly);
    const auto sorted = s.sorted_eigenvalues();
    for (int k = 0; k < H.dim(); ++k) {
      worst_eig = std::max(worst_eig, std::abs(sorted[k] - es.eigenvalues()[k]));
      r.num(sorted[k]);
    }
    for (int c = 0; c < H.dim(); ++c) {
      const Eigen::VectorXd v = s.vectors.col(c);
      worst_res = std::max(worst_res, (H.dense * v - s.pairs[c].lambda * v).norm());
    }
  }
  r.check(worst_eig <= 1e-9, "eigenvalue deviation " + fmt("%.2e", worst_eig));
  r.check(worst_res <= 1e-9, "eigenpair residual " + fmt("%.2e", worst_res));
  r.note("max |dlambda| " + fmt("%.2e", worst_eig) + ", max residual " + fmt("%.2e", worst_res));
  return r.done();
}

Outcome criterion2() {
  Recorder r;
  for (auto p : {P(3, 5, 8), P(5, 5, 8), P(3, 9, 12), P(7, 7, 12)}) {
    const EffectiveHamiltonian H = build_H(p);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(H.dense);
    Eigen::MatrixXd pi = Eigen::MatrixXd::Zero(H.dim(), H.dim());
    int rank = 0;
    for (int k = 0; k < H.dim(); ++k) {
      if (std::abs(es.eigenvalues()[k]) < 1e-9) {
        pi += es.eigenvectors().col(k) * es.eigenvectors().col(k).transpose();
        ++rank;
      }
    }
    const double dense_overlap = pi(0, 0);  // ||Pi0 e_s||^2 = <e_s|Pi0|e_s>
    const double closed = zero_modes(p).psi1_sq * 2.0 / p.n;
    const double factored = factor_spectrum(H).pi0()(0, 0);
    r.check(rank == 2, "rank " + std::to_string(rank));
    r.check(std::abs(dense_overlap - closed) <= 1e-10 && std::abs(factored - closed) <= 1e-10,
            "overlap mismatch at n=" + std::to_string(p.n));
    r.num(closed);
    if (p.d == 3 && p.m == 5) {
      r.check(std::abs(dense_overlap - 0.125) <= 1e-10, "(3,5,8) overlap " + fmt("%.12f", dense_overlap));
      r.note("(3,5,8) ||Pi0 e_s||^2 = " + fmt("%.12f", dense_overlap));
    }
  }
  r.note("rank 2 on 4 instances");
  return r.done();
}

Outcome criterion3() {
  Recorder r;
  double worst_det = 0.0;
  bool zero_exact = true;
  for (auto p : {P(3, 5, 8), P(5, 7, 12), P(7, 9, 16), P(3, 21, 4)}) {
    const double g = (p.d - 1) / 2.0;
    for (int l = 1; l <= p.n; ++l) {
      const double mu = cycle_eigenvalue(l, p.n);
      const long double det = h1_determinant(mu, g * mu, p);
      if (mu == 0.0) {
        zero_exact = zero_exact && det == 0.0L;
        continue;
      }
      const double dense = h1_matrix(mu, g * mu, p).fullPivLu().determinant();
      worst_det = std::max(worst_det, std::abs(static_cast<double>(det) - dense) / std::abs(dense));
      r.num(static_cast<double>(det));
    }
  }
  r.check(worst_det <= 1e-9, "det relative error " + fmt("%.2e", worst_det));
  r.check(zero_exact, "det not exactly zero at mu = 0");

  double worst_inv = 0.0;
  int points = 0;
  for (int d : {3, 5, 7, 9})
    for (int m : {3, 5, 7, 9, 11}) {
      const GraphParams p = P(d, m, 4);
      for (int k = 0; k < 10; ++k, ++points) {
        const double a = (k % 2 ? -1.0 : 1.0) * (0.05 + 0.21 * k);
        const Eigen::MatrixXd inv = h1_inverse(a, a * (d - 1) / 2.0, p);
        const Eigen::MatrixXd ref = h1_matrix(a, a * (d - 1) / 2.0, p).inverse();
        for (int i = 0; i < m; ++i)
          for (int j = 0; j < m; ++j)
            worst_inv = std::max(worst_inv, std::abs(inv(i, j) - ref(i, j)) / std::max(1.0, std::abs(ref(i, j))));
        r.num(inv(0, 0));
      }
    }
  r.check(worst_inv <= 1e-9, "inverse error " + fmt("%.2e", worst_inv));

  double worst_margin = 1e300;
  for (int d : {3, 5, 7})
    for (int m = 3; m <= 21; m += 2) {
      const GraphParams p = P(d, m, 4);
      const double v = d1_min_nonzero(p);
      worst_margin = std::min(worst_margin, v - 2 * std::sqrt(d - 2.0) / (m - 1));
      r.num(v);
    }
  r.check(worst_margin >= -1e-9, "D1 gap bound violated by " + fmt("%.2e", -worst_margin));
  r.note("det rel err " + fmt("%.2e", worst_det) + ", inverse err " + fmt("%.2e", worst_inv) + " over " +
         std::to_string(points) + " points, D1 bound margin " + fmt("%.3g", worst_margin));
  return r.done();
}

Outcome criterion4() {
  Recorder r;
  double worst_ratio = 0.0;
  for (double delta : {0.01, 0.05, kMaxFilterDelta}) {
    for (int ell = 1; ell <= 200; ++ell) {
      const double bound = 2 * std::exp(-std::sqrt(2.0) * ell * delta);
      double worst = 0.0;
      for (int k = 0; k <= 1000; ++k) worst = std::max(worst, std::abs(eval_R(delta + (1 - delta) * k / 1000.0, ell, delta)));
      worst_ratio = std::max(worst_ratio, worst / bound);
      r.num(worst);
    }
  }
  r.check(worst_ratio <= 1.0, "grid max exceeds bound by ratio " + fmt("%.6f", worst_ratio));

  double worst_excess = -1e300;
  for (auto p : {P(3, 5, 8), P(5, 7, 8)}) {
    const EffectiveHamiltonian H = build_H(p);
    const SpectrumReport s = factor_spectrum(H);
    const Eigen::VectorXd target = s.pi0().col(0);
    FilterSpec spec = make_filter_spec(s.delta, p, 0.5);
    for (int ell = 1; ell <= 200; ++ell) {
      spec.ell = ell;
      const double res = (apply_filter(H, spec) - target).norm();
      worst_excess = std::max(worst_excess, res - spec.bound());
      r.num(res);
    }
  }
  r.check(worst_excess <= 1e-9, "filter residual exceeds bound by " + fmt("%.2e", worst_excess));
  r.note("max |R|/bound " + fmt("%.4f", worst_ratio) + ", max residual - bound " + fmt("%.3g", worst_excess));
  return r.done();
}

Outcome criterion5() {
  Recorder r;
  const GraphParams p = P(3, 5, 8);
  const SunflowerGraph g(p, Backend::Explicit);
  const EffectiveHamiltonian H = build_H(p);
  const double inv = verify_invariance(g, H, 100, 5);
  const double res = verify_restriction(g, H, 20);
  r.num(inv);
  r.num(res);
  r.check(inv <= 1e-8, "invariance " + fmt("%.2e", inv));
  r.check(res <= 1e-8, "restriction " + fmt("%.2e", res));
  r.note("invariance " + fmt("%.2e", inv) + ", restriction (k<=20) " + fmt("%.2e", res));
  return r.done();
}

Outcome criterion6(int workers) {
  Recorder r;
  for (auto p : {P(3, 5, 8), P(3, 9, 12)}) {
    const SunflowerGraph g(p, Backend::Explicit);
    const EffectiveHamiltonian H = build_H(p);
    const double gap = factor_spectrum(H, false).delta;
    const FilterSpec spec = make_filter_spec(gap, p, default_filter_eps(p));
    for (SampleMode mode : {SampleMode::Ideal, SampleMode::Filtered}) {
      const MeasurementDistribution dist =
          mode == SampleMode::Ideal ? ideal_distribution(p) : filtered_distribution(H, spec);
      const auto results = run_algorithm1_trials(g, dist, spec, 1.0 / 3.0, 606, 100, workers);
      std::uint64_t ok = 0;
      bool verified = true, root_len = true;
      for (const auto& res : results) {
        if (!res.success) continue;
        ++ok;
        verified = verified && verify_path(g, res.path);
        if (res.root_path) root_len = root_len && res.hops == p.n / 2;
        r.num(static_cast<std::uint64_t>(res.hops));
        r.num(res.ledger.classical_actual.total());
      }
      const Interval iv = wilson_interval(ok, 100);
      const std::string tag = "(" + std::to_string(p.d) + "," + std::to_string(p.m) + "," + std::to_string(p.n) + ") " +
                              std::string(sample_mode_name(mode));
      r.check(iv.rate >= 2.0 / 3.0 && iv.low > 0.55, tag + " rate " + fmt("%.2f", iv.rate));
      r.check(verified, tag + " unverified path");
      r.check(root_len, tag + " root path length");
      r.note(tag + " " + std::to_string(ok) + "/100 (low " + fmt("%.3f", iv.low) + ")");
      r.num(ok);
    }
  }
  return r.done();
}

Outcome criterion7(int workers) {
  Recorder r;
  std::vector<SuccessRow> rows = estimate_success(3, {8, 12, 16}, 0.125, Strategy::RandomEmbedding, 500, 707, workers);
  bool decreasing = true;
  std::string rates;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    if (k) decreasing = decreasing && rows[k].rate.rate < rows[k - 1].rate.rate;
    rates += (k ? " " : "") + std::string("n=") + std::to_string(rows[k].n) + ":" +
             std::to_string(rows[k].successes) + "/500(q=" + std::to_string(rows[k].budget) + ")";
    r.num(rows[k].successes);
  }
  const bool separated = rows.back().rate.high < rows.front().rate.low;
  r.check(decreasing && separated, "classical rates not strictly decreasing/separated [" + rates + "]");

  std::vector<double> ns, totals;
  for (int n : {8, 12, 16, 20, 24}) {
    const GraphParams p = P(3, n + 1, n);
    const double gap = factor_spectrum(build_H(p), false).delta;
    const FilterSpec spec = make_filter_spec(gap, p, default_filter_eps(p));
    const std::uint64_t n_s = choose_Ns(ideal_distribution(p), 1.0 / 3.0);
    const QueryLedger l = query_cost(p, spec, n_s);
    ns.push_back(n);
    totals.push_back(static_cast<double>(l.quantum_model_total));
    r.num(l.quantum_model_total);
  }
  const LinearFit fit = loglog_fit(ns, totals);
  r.check(fit.slope <= 7.0 && fit.r2 >= 0.99, "quantum slope " + fmt("%.3f", fit.slope) + " r2 " + fmt("%.5f", fit.r2));
  r.note("classical " + rates + "; quantum log-log slope " + fmt("%.3f", fit.slope) + " r2 " + fmt("%.5f", fit.r2));
  return r.done();
}

Outcome criterion8(int workers) {
  Recorder r;
  std::vector<double> fail;
  std::string rates;
  for (int N : {8, 12, 16}) {
    const BipartiteReport b = bipartite_check(N, 3, 200, CheckMode::Exhaustive, 808, workers);
    fail.push_back(1.0 - b.rate_i.rate);
    rates += (rates.empty() ? "" : " ") + std::string("N=") + std::to_string(N) + ":" + std::to_string(b.pass_i) + "/200";
    r.num(b.pass_i);
    r.num(b.pass_ii);
  }
  const bool nonincreasing = fail[1] <= fail[0] && fail[2] <= fail[1];
  r.check(nonincreasing, "failure fraction of (i) increases [" + rates + "]");

  const SunflowerGraph g(P(7, 5, 8), Backend::Explicit);
  const GapResult gap = adjacency_gap(g);
  r.num(gap.lambda2);
  r.check(gap.gap > 0.0, "adjacency gap " + fmt("%.3g", gap.gap));
  const ExpansionSample s = vertex_expansion_sample(g, 10000, {}, 809);
  r.num(s.overall_min);
  r.check(s.overall_min > 0.0, "min expansion ratio " + fmt("%.3g", s.overall_min));
  r.note("(i) passes " + rates + ", gap " + fmt("%.4f", gap.gap) + " (" + gap.method + "), min ratio " +
         fmt("%.4f", s.overall_min) + " over 10^4 subsets");
  return r.done();
}

struct Criterion {
  int id;
  double limit_s;  // runtime cap; 0 for none
  std::function<Outcome(int)> run;
};

}  // namespace

int main(int argc, char** argv) {
  std::set<int> expect_fail;
  int workers = resolve_workers(0);
  for (int k = 1; k < argc; ++k) {
    if (!std::strcmp(argv[k], "--expect-fail") && k + 1 < argc) expect_fail.insert(std::atoi(argv[++k]));
    else if (!std::strcmp(argv[k], "--workers") && k + 1 < argc) workers = std::atoi(argv[++k]);
  }

  const std::vector<Criterion> criteria = {
      {1, 5, [](int) { return criterion1(); }},
      {2, 0, [](int) { return criterion2(); }},
      {3, 0, [](int) { return criterion3(); }},
      {4, 30, [](int) { return criterion4(); }},
      {5, 0, [](int) { return criterion5(); }},
      {6, 120, criterion6},
      {7, 600, criterion7},
      {8, 300, criterion8},
  };

  int unexpected = 0;
  auto report = [&](int id, bool pass, double secs, const std::string& detail) {
    const bool expected = expect_fail.count(id) > 0;
    std::printf("criterion %d: %s (%.2f s) %s%s\n", id, pass ? "PASS" : "FAIL", secs, detail.c_str(),
                !pass && expected ? " [known failure]" : "");
    std::fflush(stdout);
    if (!pass && !expected) ++unexpected;
  };

  std::vector<std::string> prints;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o = c.run(workers);
    const double secs = seconds_since(t0);
    if (c.limit_s > 0 && secs >= c.limit_s) {
      o.pass = false;
      o.detail += " | runtime over " + fmt("%.0f s", c.limit_s);
    }
    prints.push_back(o.fingerprint);
    report(c.id, o.pass, secs, o.detail);
  }

  // Determinism: rerun everything with the same seeds and a different worker count.
  const auto t0 = std::chrono::steady_clock::now();
  const int other = workers == 1 ? 3 : 1;
  std::string mismatched;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    if (criteria[k].run(other).fingerprint != prints[k]) mismatched += " " + std::to_string(criteria[k].id);
  }
  report(9, mismatched.empty(), seconds_since(t0),
         mismatched.empty() ? "criteria 1-8 reproduced bit-identically with " + std::to_string(other) + " worker(s)"
                            : "outputs differ for criteria" + mismatched);
  return unexpected == 0 ? 0 : 1;
}
