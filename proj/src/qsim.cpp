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

#include "sunflower/qsim.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <queue>
#include <set>

#include "sunflower/parallel.hpp"
#include "sunflower/spectral.hpp"

namespace sunflower {

using nlohmann::json;

std::string_view sample_mode_name(SampleMode m) { return m == SampleMode::Ideal ? "ideal" : "filtered"; }

SampleMode parse_sample_mode(std::string_view name) {
  if (name == "ideal") return SampleMode::Ideal;
  if (name == "filtered") return SampleMode::Filtered;
  throw Error(ErrorCode::DomainError, "unknown mode: " + std::string(name));
}

namespace {

void finish(MeasurementDistribution& d) {
  d.p /= d.p.sum();
  d.cumulative.resize(d.p.size());
  double acc = 0.0;
  for (Eigen::Index k = 0; k < d.p.size(); ++k) {
    acc += d.p[k];
    d.cumulative[k] = acc;
  }
}

}  // namespace

double MeasurementDistribution::p_min() const {
  double best = std::numeric_limits<double>::infinity();
  for (int i = 1; i <= params.n; i += 2) best = std::min(best, root_mass(i));
  return best;
}

MeasurementDistribution ideal_distribution(const GraphParams& p) {
  MeasurementDistribution d;
  d.params = p;
  d.mode = SampleMode::Ideal;
  const ZeroModes z = zero_modes(p);
  d.p = z.eta_odd.cwiseAbs2();
  d.amplitude = std::sqrt(start_overlap_sq(p));
  finish(d);
  return d;
}

MeasurementDistribution filtered_distribution(const EffectiveHamiltonian& H, const FilterSpec& spec) {
  MeasurementDistribution d;
  d.params = H.params;
  d.mode = SampleMode::Filtered;
  d.ell = spec.ell;
  const Eigen::VectorXd w = apply_filter(H, spec);
  d.amplitude = w.norm();
  d.p = w.cwiseAbs2();
  finish(d);
  return d;
}

double total_variation(const MeasurementDistribution& a, const MeasurementDistribution& b) {
  return 0.5 * (a.p - b.p).cwiseAbs().sum();
}

Label sample_vertex(const MeasurementDistribution& dist, const SunflowerGraph& g, Rng& rng) {
  const double u = uniform01(rng) * dist.cumulative.back();
  auto it = std::upper_bound(dist.cumulative.begin(), dist.cumulative.end(), u);
  // Skip zero-mass cells that share the cumulative value of their predecessor.
  auto cell = static_cast<int>(std::min<std::ptrdiff_t>(it - dist.cumulative.begin(), dist.p.size() - 1));
  while (dist.p[cell] == 0.0 && cell > 0) --cell;
  const int n = dist.params.n;
  const int i = cell % n + 1, j = cell / n + 1;
  const std::uint64_t member = uniform_below(rng, dist.params.layer_size(j));
  return g.label_of({i, j, member});
}

std::uint64_t choose_Ns(const MeasurementDistribution& dist, double beta) {
  if (!(beta > 0.0 && beta < 1.0)) throw Error(ErrorCode::DomainError, "beta must lie in (0, 1)");
  const double pmin = dist.p_min();
  if (!(pmin > 0.0)) throw Error(ErrorCode::DegenerateDistribution, "an odd root has zero sampling probability");
  const double ns = std::log(dist.params.n / (2.0 * beta)) / -std::log1p(-pmin);
  return static_cast<std::uint64_t>(std::ceil(ns));
}

double default_filter_eps(const GraphParams& p) {
  const double amp2 = start_overlap_sq(p);
  return amp2 * std::sqrt(amp2) / 4.0;  // p_min = ||Pi0 e_s||^2 in the ideal distribution
}

QueryLedger query_cost(const GraphParams& p, const FilterSpec& spec, std::uint64_t n_s,
                       std::int64_t indicator_queries) {
  QueryLedger l;
  l.d = p.d;
  l.c_be = 2 * p.d + 3;
  l.ell = spec.ell;
  l.filter_degree = 2 * spec.ell;
  l.n_s = n_s;
  l.start_amplitude = std::sqrt(start_overlap_sq(p));
  l.eps = spec.eps;
  l.eps_prime = spec.eps_prime;
  l.varsigma = robustness_bound(spec.ell, spec.eps_a, spec.alpha);
  l.r_aa = static_cast<std::uint64_t>(std::ceil(std::log(2.0 / spec.eps_prime) / l.start_amplitude));
  l.state_prep_queries = n_s * l.r_aa * static_cast<std::uint64_t>(l.filter_degree) * l.c_be;
  l.neighbor_queries = static_cast<std::uint64_t>(p.d) * n_s;
  l.indicator_queries = indicator_queries >= 0 ? static_cast<std::uint64_t>(indicator_queries)
                                               : static_cast<std::uint64_t>(p.d + 1) * n_s;
  l.quantum_model_total = l.state_prep_queries + l.neighbor_queries + l.indicator_queries;
  return l;
}

bool verify_path(const SunflowerGraph& g, const std::vector<Label>& path) {
  if (path.empty()) return false;
  for (std::size_t k = 0; k + 1 < path.size(); ++k) {
    if (g.multiplicity(path[k], path[k + 1]) == 0) return false;
  }
  return true;
}

PathResult run_algorithm1(const SunflowerGraph& g, const MeasurementDistribution& dist, const FilterSpec& spec,
                          const Algorithm1Options& opts) {
  PathResult r;
  r.seed = opts.seed;
  r.trial = opts.trial;
  Rng rng = trial_rng(opts.seed, opts.trial);
  const std::uint64_t n_s = choose_Ns(dist, opts.beta);

  std::vector<Label> samples(n_s);
  for (auto& v : samples) v = sample_vertex(dist, g, rng);
  std::sort(samples.begin(), samples.end());
  samples.erase(std::unique(samples.begin(), samples.end()), samples.end());
  r.unique_samples = samples.size();

  // Meter this run privately so concurrent trials reconcile exactly.
  MeterSnapshot used;
  std::map<Label, std::set<Label>> adj;
  const int d = g.params().d;
  for (Label v : samples) {
    adj[v];
    for (int k = 1; k <= d; ++k) {
      ++used.neighbor;
      const Label w = g.neighbor_unmetered(v, k);
      if (g.is_sentinel(w)) continue;
      adj[v].insert(w);
      adj[w].insert(v);
    }
  }

  std::optional<Label> target;
  for (const auto& [v, nbrs] : adj) {
    ++used.indicator;
    if (g.is_target_unmetered(v)) {
      target = v;
      break;
    }
  }

  const Label s = g.s_label();
  if (target && adj.count(s)) {
    std::map<Label, Label> parent{{s, s}};
    std::queue<Label> frontier;
    frontier.push(s);
    while (!frontier.empty() && !parent.count(*target)) {
      const Label v = frontier.front();
      frontier.pop();
      for (Label w : adj[v]) {
        if (parent.emplace(w, v).second) frontier.push(w);
      }
    }
    if (parent.count(*target)) {
      for (Label v = *target; v != s; v = parent[v]) r.path.push_back(v);
      r.path.push_back(s);
      std::reverse(r.path.begin(), r.path.end());
    }
  }

  if (!r.path.empty()) {
    bool ok = true;
    for (std::size_t k = 0; k + 1 < r.path.size() && ok; ++k) {
      ++used.multiplicity;
      ok = g.multiplicity_unmetered(r.path[k], r.path[k + 1]) > 0;
    }
    r.success = ok && r.path.front() == s && r.path.back() == g.t_label();
    if (!r.success) r.path.clear();
  }
  if (r.success) {
    r.hops = static_cast<int>(r.path.size()) - 1;
    r.root_path = std::all_of(r.path.begin(), r.path.end(), [&](Label v) {
      auto c = g.locate(v);
      return c && c->layer == 1;
    });
  }
  g.meters().add(used);

  r.ledger = query_cost(g.params(), spec, n_s, static_cast<std::int64_t>(used.indicator));
  r.ledger.classical_actual = used;
  return r;
}

std::vector<PathResult> run_algorithm1_trials(const SunflowerGraph& g, const MeasurementDistribution& dist,
                                              const FilterSpec& spec, double beta, std::uint64_t seed, int trials,
                                              int workers) {
  std::vector<PathResult> out(static_cast<std::size_t>(trials));
  parallel_for(static_cast<std::uint64_t>(trials), workers, [&](std::uint64_t t) {
    out[t] = run_algorithm1(g, dist, spec, {beta, seed, t});
  });
  return out;
}

json ledger_to_json(const QueryLedger& l) {
  return {
      {"d", l.d},
      {"c_be", l.c_be},
      {"ell", l.ell},
      {"filter_degree", l.filter_degree},
      {"r_aa", l.r_aa},
      {"n_s", l.n_s},
      {"start_amplitude", l.start_amplitude},
      {"eps", l.eps},
      {"eps_prime", l.eps_prime},
      {"varsigma", l.varsigma},
      {"quantum_model",
       {{"state_prep", l.state_prep_queries},
        {"neighbor", l.neighbor_queries},
        {"indicator", l.indicator_queries},
        {"total", l.quantum_model_total}}},
      {"classical_actual",
       {{"neighbor", l.classical_actual.neighbor},
        {"multiplicity", l.classical_actual.multiplicity},
        {"indicator", l.classical_actual.indicator},
        {"total", l.classical_actual.total()}}},
  };
}

json path_result_to_json(const PathResult& r) {
  return {{"success", r.success}, {"path", r.path},         {"hops", r.hops},
          {"root_path", r.root_path}, {"unique_samples", r.unique_samples}, {"seed", r.seed},
          {"trial", r.trial},     {"ledger", ledger_to_json(r.ledger)}};
}

}  // namespace sunflower
