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

#include "sunflower/expansion.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "sunflower/hamiltonian.hpp"
#include "sunflower/parallel.hpp"

namespace sunflower {

namespace {

GapResult dense_gap(const SunflowerGraph& g) {
  const auto& off = g.csr_offsets();
  const auto& tgt = g.csr_targets();
  const auto n = static_cast<Eigen::Index>(g.params().graph_vertex_count());
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index v = 0; v < n; ++v)
    for (std::uint64_t e = off[v]; e < off[v + 1]; ++e) A(v, tgt[e]) += 1.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(A, Eigen::EigenvaluesOnly);
  GapResult r;
  r.method = "dense";
  r.lambda2 = es.eigenvalues()[n - 2];
  return r;
}

// Lanczos with full reorthogonalization on the complement of the all-ones vector,
// whose largest Ritz value converges to lambda_2.
GapResult lanczos_gap(const SunflowerGraph& g) {
  const auto n = static_cast<Eigen::Index>(g.params().graph_vertex_count());
  const double d = g.params().d;
  const int max_iter = static_cast<int>(std::min<Eigen::Index>(n - 1, 600));
  const Eigen::VectorXd ones = Eigen::VectorXd::Constant(n, 1.0 / std::sqrt(static_cast<double>(n)));
  auto deflate = [&](Eigen::VectorXd& v) { v -= ones.dot(v) * ones; };

  Rng rng(derive_key(g.params().seed, kTagSweep, 0x6c616e637a6f73ULL));
  Eigen::VectorXd q(n);
  for (Eigen::Index i = 0; i < n; ++i) q[i] = normal01(rng);
  deflate(q);
  q.normalize();

  Eigen::MatrixXd Q(n, max_iter);
  std::vector<double> alpha, beta;
  GapResult r;
  r.method = "lanczos";
  for (int k = 0; k < max_iter; ++k) {
    Q.col(k) = q;
    Eigen::VectorXd w = adjacency_apply(g, q);
    deflate(w);
    alpha.push_back(q.dot(w));
    for (int pass = 0; pass < 2; ++pass) {
      w -= Q.leftCols(k + 1) * (Q.leftCols(k + 1).transpose() * w);
      deflate(w);
    }
    const double b = w.norm();
    const int size = k + 1;
    if (size % 10 == 0 || b < 1e-12 || size == max_iter) {
      Eigen::VectorXd diag = Eigen::Map<Eigen::VectorXd>(alpha.data(), size);
      Eigen::VectorXd sub = size > 1 ? Eigen::VectorXd(Eigen::Map<Eigen::VectorXd>(beta.data(), size - 1))
                                     : Eigen::VectorXd();
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
      es.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
      r.lambda2 = es.eigenvalues()[size - 1];
      r.iterations = size;
      const double residual = b * std::abs(es.eigenvectors()(size - 1, size - 1));
      if (residual < 1e-10 * d || b < 1e-12) break;
    }
    beta.push_back(b);
    q = w / b;
  }
  return r;
}

}  // namespace

GapResult adjacency_gap(const SunflowerGraph& g, GapMethod method) {
  const std::uint64_t n = g.params().graph_vertex_count();
  if (method == GapMethod::Auto) method = n < kDenseEigenLimit ? GapMethod::Dense : GapMethod::Lanczos;
  GapResult r = method == GapMethod::Dense ? dense_gap(g) : lanczos_gap(g);
  const double d = g.params().d;
  const Eigen::VectorXd ones = Eigen::VectorXd::Ones(static_cast<Eigen::Index>(n));
  const Eigen::VectorXd a1 = adjacency_apply(g, ones);
  r.lambda1 = a1.dot(ones) / ones.squaredNorm();
  r.lambda1_residual = (a1 - d * ones).norm() / ones.norm();
  r.gap = d - r.lambda2;
  const double logv = std::log2(static_cast<double>(n));
  r.normalized = r.gap * logv * logv * logv;
  return r;
}

double subset_expansion_ratio(const SunflowerGraph& g, const std::vector<std::uint64_t>& subset) {
  const auto& off = g.csr_offsets();
  const auto& tgt = g.csr_targets();
  std::vector<std::uint64_t> in(subset.begin(), subset.end());
  std::sort(in.begin(), in.end());
  std::vector<std::uint64_t> boundary;
  for (std::uint64_t v : in)
    for (std::uint64_t e = off[v]; e < off[v + 1]; ++e)
      if (!std::binary_search(in.begin(), in.end(), tgt[e])) boundary.push_back(tgt[e]);
  std::sort(boundary.begin(), boundary.end());
  boundary.erase(std::unique(boundary.begin(), boundary.end()), boundary.end());
  return static_cast<double>(boundary.size()) / static_cast<double>(in.size());
}

double tree_expansion_ratio(const GraphParams& p) {
  return (2.0 + 2.0 * static_cast<double>(p.leaves_per_tree())) / static_cast<double>(p.vertices_per_tree());
}

ExpansionSample vertex_expansion_sample(const SunflowerGraph& g, int trials, std::vector<std::uint64_t> sizes,
                                        std::uint64_t seed) {
  const auto& off = g.csr_offsets();
  const auto& tgt = g.csr_targets();
  const std::uint64_t n = g.params().graph_vertex_count();
  if (sizes.empty())
    for (std::uint64_t s = 1; s <= n / 2; s *= 2) sizes.push_back(s);
  for (auto& s : sizes) s = std::clamp<std::uint64_t>(s, 1, std::max<std::uint64_t>(1, n / 2));

  ExpansionSample out;
  out.sizes = sizes;
  out.min_ratio.assign(sizes.size(), std::numeric_limits<double>::infinity());
  out.samples_per_size.assign(sizes.size(), 0);

  // Stamps avoid clearing O(|V|) arrays per sample.
  std::vector<std::uint32_t> in_t(n, 0), in_b(n, 0);
  std::uint32_t stamp = 0;
  std::vector<std::uint64_t> members, nbrs;
  Rng rng(derive_key(seed, kTagSweep, 0x657870ULL));
  for (int t = 0; t < trials; ++t) {
    const std::size_t which = static_cast<std::size_t>(t) % sizes.size();
    const std::uint64_t target = sizes[which];
    ++stamp;
    members.clear();
    const std::uint64_t start = uniform_below(rng, n);
    in_t[start] = stamp;
    members.push_back(start);
    for (std::size_t head = 0; head < members.size() && members.size() < target; ++head) {
      const std::uint64_t v = members[head];
      nbrs.assign(tgt.begin() + off[v], tgt.begin() + off[v + 1]);
      shuffle_range(nbrs.begin(), nbrs.end(), rng);
      for (std::uint64_t w : nbrs) {
        if (in_t[w] == stamp) continue;
        in_t[w] = stamp;
        members.push_back(w);
        if (members.size() == target) break;
      }
    }
    std::uint64_t boundary = 0;
    for (std::uint64_t v : members)
      for (std::uint64_t e = off[v]; e < off[v + 1]; ++e) {
        const std::uint64_t w = tgt[e];
        if (in_t[w] != stamp && in_b[w] != stamp) {
          in_b[w] = stamp;
          ++boundary;
        }
      }
    const double ratio = static_cast<double>(boundary) / static_cast<double>(members.size());
    out.min_ratio[which] = std::min(out.min_ratio[which], ratio);
    ++out.samples_per_size[which];
  }
  out.overall_min = *std::min_element(out.min_ratio.begin(), out.min_ratio.end());
  return out;
}

double expansion_delta(int N) { return 1.0 / (2.0 * std::log2(static_cast<double>(N))); }

std::vector<std::uint64_t> BipartiteGraph::left_masks() const {
  std::vector<std::uint64_t> masks(N, 0);
  for (const auto& mt : matchings)
    for (int v = 0; v < N; ++v) masks[v] |= std::uint64_t{1} << mt[v];
  return masks;
}

BipartiteGraph random_bipartite(int N, int D, Rng& rng) {
  BipartiteGraph b;
  b.N = N;
  b.D = D;
  for (int k = 0; k < D; ++k) {
    std::vector<int> perm(N);
    for (int v = 0; v < N; ++v) perm[v] = v;
    shuffle_range(perm.begin(), perm.end(), rng);
    b.matchings.push_back(std::move(perm));
  }
  return b;
}

std::string_view check_mode_name(CheckMode m) { return m == CheckMode::Exhaustive ? "exhaustive" : "monte-carlo"; }

CheckMode parse_check_mode(std::string_view name) {
  if (name == "exhaustive") return CheckMode::Exhaustive;
  if (name == "monte-carlo") return CheckMode::MonteCarlo;
  throw Error(ErrorCode::DomainError, "unknown check mode: " + std::string(name));
}

namespace {

constexpr int kMaxExhaustiveN = 20;
constexpr int kMaxExhaustiveBits = 22;

// Subset expansion checks over a vertex set of `bits` vertices with neighbor masks.
// Condition: |Gamma(S) minus S (if exclude_self)| >= factor * |S| for all 1 <= |S| <= max_size.
bool all_subsets_pass(const std::vector<std::uint64_t>& masks, int max_size, double factor, bool exclude_self) {
  const int bits = static_cast<int>(masks.size());
  const std::uint64_t count = std::uint64_t{1} << bits;
  std::vector<std::uint64_t> gamma(count, 0);
  for (std::uint64_t S = 1; S < count; ++S) {
    gamma[S] = gamma[S & (S - 1)] | masks[std::countr_zero(S)];
    const int size = std::popcount(S);
    if (size > max_size) continue;
    const std::uint64_t g = exclude_self ? gamma[S] & ~S : gamma[S];
    if (std::popcount(g) < factor * size - 1e-12) return false;
  }
  return true;
}

bool sampled_subsets_pass(const std::vector<std::uint64_t>& masks, int max_size, double factor, bool exclude_self,
                          Rng& rng, int samples) {
  const int bits = static_cast<int>(masks.size());
  std::vector<int> idx(bits);
  for (int s = 0; s < samples; ++s) {
    const int size = 1 + static_cast<int>(uniform_below(rng, max_size));
    for (int v = 0; v < bits; ++v) idx[v] = v;
    std::uint64_t S = 0, g = 0;
    for (int k = 0; k < size; ++k) {
      const int pick = k + static_cast<int>(uniform_below(rng, bits - k));
      std::swap(idx[k], idx[pick]);
      S |= std::uint64_t{1} << idx[k];
      g |= masks[idx[k]];
    }
    if (exclude_self) g &= ~S;
    if (std::popcount(g) < factor * size - 1e-12) return false;
  }
  return true;
}

std::vector<std::uint64_t> both_side_masks(const BipartiteGraph& b) {
  std::vector<std::uint64_t> masks(2 * b.N, 0);
  for (const auto& mt : b.matchings)
    for (int v = 0; v < b.N; ++v) {
      masks[v] |= std::uint64_t{1} << (b.N + mt[v]);
      masks[b.N + mt[v]] |= std::uint64_t{1} << v;
    }
  return masks;
}

}  // namespace

BipartiteVerdict check_bipartite(const BipartiteGraph& b, CheckMode mode, Rng& rng, int samples) {
  if (b.N > 32) throw Error(ErrorCode::DomainError, "bipartite check supports at most 32 vertices per side");
  const double delta = expansion_delta(b.N);
  const int max_i = static_cast<int>(std::floor(2.0 * b.N / 3.0 + 1e-12));
  BipartiteVerdict v;
  const auto left = b.left_masks();
  const auto both = both_side_masks(b);
  if (mode == CheckMode::Exhaustive) {
    if (b.N > kMaxExhaustiveN) throw Error(ErrorCode::ExhaustiveTooLarge, "exhaustive check requires N <= 20");
    v.cond_i = all_subsets_pass(left, max_i, 1.0 + delta, false);
    if (2 * b.N <= kMaxExhaustiveBits) {
      v.cond_ii = all_subsets_pass(both, b.N, delta / 2.0, true);
      v.cond_ii_exhaustive = true;
    } else {
      v.cond_ii = sampled_subsets_pass(both, b.N, delta / 2.0, true, rng, samples);
    }
  } else {
    v.cond_i = sampled_subsets_pass(left, max_i, 1.0 + delta, false, rng, samples);
    v.cond_ii = sampled_subsets_pass(both, b.N, delta / 2.0, true, rng, samples);
  }
  return v;
}

BipartiteReport bipartite_check(int N, int D, int draws, CheckMode mode, std::uint64_t seed, int workers) {
  if (mode == CheckMode::Exhaustive && N > kMaxExhaustiveN) {
    throw Error(ErrorCode::ExhaustiveTooLarge, "exhaustive check requires N <= 20");
  }
  BipartiteReport r;
  r.N = N;
  r.D = D;
  r.draws = draws;
  r.mode = mode;
  r.delta = expansion_delta(N);
  std::vector<BipartiteVerdict> verdicts(static_cast<std::size_t>(draws));
  parallel_for(static_cast<std::uint64_t>(draws), workers, [&](std::uint64_t k) {
    Rng rng = trial_rng(seed, k);
    const BipartiteGraph b = random_bipartite(N, D, rng);
    verdicts[k] = check_bipartite(b, mode, rng);
  });
  r.cond_ii_exhaustive = true;
  for (const auto& v : verdicts) {
    r.pass_i += v.cond_i;
    r.pass_ii += v.cond_ii;
    r.cond_ii_exhaustive = r.cond_ii_exhaustive && v.cond_ii_exhaustive;
  }
  r.rate_i = wilson_interval(r.pass_i, static_cast<std::uint64_t>(draws));
  r.rate_ii = wilson_interval(r.pass_ii, static_cast<std::uint64_t>(draws));
  return r;
}

}  // namespace sunflower
