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
#include <string_view>
#include <vector>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include "sunflower/filtering.hpp"
#include "sunflower/graph.hpp"
#include "sunflower/rng.hpp"

namespace sunflower {

enum class SampleMode { Ideal, Filtered };

std::string_view sample_mode_name(SampleMode m);
SampleMode parse_sample_mode(std::string_view name);

/// Outcome distribution of measuring the vertex register of the prepared state.
/// Mass p[(j-1)n + (i-1)] sits on supervertex (i, j) and is spread uniformly
/// over its members.
struct MeasurementDistribution {
  GraphParams params;
  SampleMode mode = SampleMode::Ideal;
  int ell = 0;                // filter half-degree, 0 in ideal mode
  Eigen::VectorXd p;
  std::vector<double> cumulative;
  double amplitude = 0.0;     // ||Pi0 e_s|| (ideal) or ||R(H/alpha) e_s|| (filtered)

  double root_mass(int i) const { return p[i - 1]; }
  /// Smallest root mass over odd trees; these are the roots the BFS needs.
  double p_min() const;
};

MeasurementDistribution ideal_distribution(const GraphParams& p);
MeasurementDistribution filtered_distribution(const EffectiveHamiltonian& H, const FilterSpec& spec);

double total_variation(const MeasurementDistribution& a, const MeasurementDistribution& b);

/// Draw a supervertex, then a uniform member, and return its label.
Label sample_vertex(const MeasurementDistribution& dist, const SunflowerGraph& g, Rng& rng);

/// Samples needed so that every odd root appears with probability >= 1 - beta:
/// ceil(ln(n / (2 beta)) / -ln(1 - p_min)). Throws DegenerateDistribution if p_min = 0.
std::uint64_t choose_Ns(const MeasurementDistribution& dist, double beta);

/// Query accounting. Quantum-model entries are derived from the cost model; the
/// classical_actual snapshot comes from the oracle meters of a real run.
struct QueryLedger {
  int d = 0;
  int c_be = 0;                  // adjacency queries per block-encoding use, 2d + 3
  int ell = 0;
  int filter_degree = 0;         // 2 ell
  std::uint64_t r_aa = 0;        // amplitude amplification rounds
  std::uint64_t n_s = 0;
  double start_amplitude = 0.0;  // ||Pi0 e_s||
  double eps = 0.0;
  double eps_prime = 0.0;
  double varsigma = 0.0;
  std::uint64_t state_prep_queries = 0;  // n_s * r_aa * 2 ell * c_be
  std::uint64_t neighbor_queries = 0;    // d * n_s
  std::uint64_t indicator_queries = 0;
  std::uint64_t quantum_model_total = 0;
  MeterSnapshot classical_actual;
};

/// Cost model for one run. `indicator_queries` defaults to the (d+1) n_s bound on
/// the sampled subgraph size when negative.
QueryLedger query_cost(const GraphParams& p, const FilterSpec& spec, std::uint64_t n_s,
                       std::int64_t indicator_queries = -1);

struct Algorithm1Options {
  double beta = 1.0 / 3.0;
  std::uint64_t seed = 0;
  std::uint64_t trial = 0;
};

struct PathResult {
  bool success = false;
  std::vector<Label> path;
  int hops = 0;
  bool root_path = false;  // every vertex on the path is a tree root
  std::uint64_t unique_samples = 0;
  std::uint64_t seed = 0;
  std::uint64_t trial = 0;
  QueryLedger ledger;
};

/// One run of the sampling algorithm: draw n_s vertices, expand each unique one
/// through the neighbor oracle, locate t with f_t, BFS from s in ascending label
/// order, then verify every hop with the multiplicity oracle. Failure is a
/// result (no path is ever fabricated).
PathResult run_algorithm1(const SunflowerGraph& g, const MeasurementDistribution& dist, const FilterSpec& spec,
                          const Algorithm1Options& opts);

/// Independent trials 0..trials-1 spread over `workers` threads. Results are in
/// trial order and do not depend on the worker count.
std::vector<PathResult> run_algorithm1_trials(const SunflowerGraph& g, const MeasurementDistribution& dist,
                                              const FilterSpec& spec, double beta, std::uint64_t seed, int trials,
                                              int workers);

/// Check each consecutive pair with the metered multiplicity oracle.
bool verify_path(const SunflowerGraph& g, const std::vector<Label>& path);

nlohmann::json ledger_to_json(const QueryLedger& l);
nlohmann::json path_result_to_json(const PathResult& r);

/// Default filter error for an instance: p_min * ||Pi0 e_s|| / 4 with the ideal p_min.
double default_filter_eps(const GraphParams& p);

}  // namespace sunflower
