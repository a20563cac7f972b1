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

#include "commands.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "sunflower/classical.hpp"
#include "sunflower/errors.hpp"
#include "sunflower/expansion.hpp"
#include "sunflower/filtering.hpp"
#include "sunflower/graph_io.hpp"
#include "sunflower/hamiltonian.hpp"
#include "sunflower/parallel.hpp"
#include "sunflower/qsim.hpp"
#include "sunflower/spectral.hpp"
#include "sunflower/stats.hpp"

namespace sunflower::cli {

using nlohmann::json;

json config_to_json(const RunConfig& c) {
  return {{"command", c.command},
          {"d", c.params.d},
          {"m", c.params.m},
          {"n", c.params.n},
          {"naux", c.naux},
          {"seed", c.params.seed},
          {"backend", c.backend},
          {"mode", c.mode},
          {"strategy", c.strategy},
          {"check_mode", c.check_mode},
          {"trials", c.trials},
          {"budget_exponent", c.budget_exponent},
          {"beta", c.beta},
          {"eps", c.eps},
          {"alpha", c.alpha},
          {"ns", c.ns},
          {"ells", c.ells},
          {"bipartite_n", c.bipartite_n},
          {"matchings", c.matchings},
          {"draws", c.draws},
          {"subsets", c.subsets},
          {"graph", c.graph},
          {"log_base_varsigma", "e"},
          {"log_base_expansion_delta", "2"}};
}

namespace {

template <class T>
void take(const json& j, const char* key, T& field) {
  if (j.contains(key) && !j.at(key).is_null()) field = j.at(key).get<T>();
}

}  // namespace

void config_from_json(const json& j, RunConfig& c) {
  try {
    take(j, "d", c.params.d);
    take(j, "m", c.params.m);
    take(j, "n", c.params.n);
    take(j, "naux", c.naux);
    take(j, "seed", c.params.seed);
    take(j, "backend", c.backend);
    take(j, "mode", c.mode);
    take(j, "strategy", c.strategy);
    take(j, "check_mode", c.check_mode);
    take(j, "trials", c.trials);
    take(j, "budget_exponent", c.budget_exponent);
    take(j, "beta", c.beta);
    take(j, "eps", c.eps);
    take(j, "alpha", c.alpha);
    take(j, "ns", c.ns);
    take(j, "ells", c.ells);
    take(j, "bipartite_n", c.bipartite_n);
    take(j, "matchings", c.matchings);
    take(j, "draws", c.draws);
    take(j, "subsets", c.subsets);
    take(j, "graph", c.graph);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ArtifactCorrupt, std::string("bad config field: ") + e.what());
  }
}

void load_config_file(const std::string& path, RunConfig& c) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ArtifactNotFound, "config file not found: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  const std::string tag = "# config: ";
  json j;
  if (text.rfind("#", 0) == 0) {
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
      if (line.rfind(tag, 0) == 0) {
        j = json::parse(line.substr(tag.size()), nullptr, false);
        break;
      }
    }
  } else {
    j = json::parse(text, nullptr, false);
  }
  if (j.is_discarded() || !j.is_object()) throw Error(ErrorCode::ArtifactCorrupt, "unreadable config: " + path);
  config_from_json(j.contains("config") ? j.at("config") : j, c);
}

namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

GraphParams instance_params(const RunConfig& c) {
  RawParams raw = c.params;
  raw.n_aux = c.naux < 0 ? 0 : c.naux;
  return validate_params(raw);
}

// Graph from --graph when given, otherwise built from the flags.
std::unique_ptr<SunflowerGraph> open_graph(const RunConfig& c) {
  if (!c.graph.empty()) return load_graph(c.graph);
  return std::make_unique<SunflowerGraph>(instance_params(c), parse_backend(c.backend));
}

std::vector<int> tree_counts(const RunConfig& c) {
  return c.ns.empty() ? std::vector<int>{8, 12, 16} : c.ns;
}

FilterSpec instance_filter(const GraphParams& p, const RunConfig& c, double gap) {
  const double eps = c.eps > 0.0 ? c.eps : default_filter_eps(p);
  return make_filter_spec(gap, p, eps, c.alpha);
}

MeasurementDistribution distribution_for(const EffectiveHamiltonian& H, const FilterSpec& spec, SampleMode mode) {
  return mode == SampleMode::Ideal ? ideal_distribution(H.params) : filtered_distribution(H, spec);
}

struct QuantumBatch {
  std::uint64_t n_s = 0;
  std::uint64_t successes = 0;
  double mean_model = 0.0;
  double mean_actual = 0.0;
  std::vector<PathResult> runs;
  FilterSpec spec;
};

QuantumBatch quantum_batch(const SunflowerGraph& g, const RunConfig& c, int workers) {
  const GraphParams& p = g.params();
  const EffectiveHamiltonian H = build_H(p);
  QuantumBatch b;
  b.spec = instance_filter(p, c, factor_spectrum(H, false).delta);
  const MeasurementDistribution dist = distribution_for(H, b.spec, parse_sample_mode(c.mode));
  b.n_s = choose_Ns(dist, c.beta);
  b.runs = run_algorithm1_trials(g, dist, b.spec, c.beta, p.seed, c.trials, workers);
  for (const auto& r : b.runs) {
    b.successes += r.success;
    b.mean_model += static_cast<double>(r.ledger.quantum_model_total);
    b.mean_actual += static_cast<double>(r.ledger.classical_actual.total());
  }
  if (!b.runs.empty()) {
    b.mean_model /= static_cast<double>(b.runs.size());
    b.mean_actual /= static_cast<double>(b.runs.size());
  }
  return b;
}

json warnings_json(const GraphParams& p) { return param_warnings(p); }

}  // namespace

CommandOutput cmd_generate(const RunConfig& c) {
  const GraphParams p = instance_params(c);
  const SunflowerGraph g(p, parse_backend(c.backend));
  const std::string path = c.out.empty() ? "sunflower_graph.json" : c.out;
  save_graph(g, path);
  CommandOutput o;
  o.summary = {{"artifact", path},
               {"params", params_to_json(p)},
               {"backend", backend_name(g.backend())},
               {"label_bits", g.label_bits()},
               {"graph_vertices", p.graph_vertex_count()},
               {"total_vertices", p.total_vertex_count()},
               {"s_label", g.s_label()},
               {"t_label", g.t_label()},
               {"warnings", warnings_json(p)}};
  if (g.backend() == Backend::Explicit) {
    const SupervertexCensus census = supervertex_census(g);
    std::uint64_t edges = 0;
    for (const auto& e : census.entries) edges += e.counted;
    json layers = json::array();
    for (int j = 1; j <= p.m; ++j) layers.push_back(p.layer_size(j));
    o.summary["census"] = {{"consistent", census.consistent()},
                           {"supervertex_pairs", census.entries.size()},
                           {"edges", edges},
                           {"layer_sizes", layers}};
    std::ostringstream csv;
    write_census_csv(census, csv);
    o.csv = csv.str();
  }
  return o;
}

CommandOutput cmd_spectrum(const RunConfig& c) {
  const GraphParams p = c.graph.empty() ? instance_params(c) : load_graph(c.graph)->params();
  const EffectiveHamiltonian H = build_H(p);
  const SpectrumReport r = factor_spectrum(H);
  const GapReport gap = spectral_gap(r);
  CommandOutput o;
  o.summary = {{"params", params_to_json(p)},
               {"eigenvalues", r.pairs.size()},
               {"gap", gap.delta},
               {"gap_times_m_n2", gap.normalized},
               {"psi1_sq", r.zero.psi1_sq},
               {"start_overlap_sq", start_overlap_sq(p)},
               {"d1_min_nonzero", d1_min_nonzero(p)}};
  std::ostringstream csv;
  write_spectrum_csv(r, H, csv);
  o.csv = csv.str();
  return o;
}

CommandOutput cmd_filter(const RunConfig& c) {
  const auto g = open_graph(c);
  const GraphParams& p = g->params();
  const EffectiveHamiltonian H = build_H(p);
  const SpectrumReport r = factor_spectrum(H);
  const Eigen::VectorXd target = r.pi0().col(0);
  const FilterSpec base = instance_filter(p, c, r.delta);
  std::vector<int> ells = c.ells;
  if (ells.empty()) {
    for (int e = 1; e < base.ell; e *= 2) ells.push_back(e);
    ells.push_back(base.ell);
  }
  const int workers = resolve_workers(c.workers);
  std::ostringstream csv;
  csv << "ell,delta,bound,measured_residual,success_prob\n";
  json rows = json::array();
  for (int ell : ells) {
    FilterSpec spec = base;
    spec.ell = ell;
    const double residual = (apply_filter(H, spec) - target).norm();
    const MeasurementDistribution dist = filtered_distribution(H, spec);
    // A low-degree filter can leave an odd root with no mass; N_s and the
    // success probability are then undefined rather than zero.
    json rate = nullptr;
    std::string rate_text = "nan";
    if (dist.p_min() > 0.0) {
      std::uint64_t ok = 0;
      for (const auto& run : run_algorithm1_trials(*g, dist, spec, c.beta, p.seed, c.trials, workers)) ok += run.success;
      const double r = c.trials > 0 ? static_cast<double>(ok) / c.trials : 0.0;
      rate = r;
      rate_text = num(r);
    }
    csv << ell << ',' << num(spec.delta) << ',' << num(spec.bound()) << ',' << num(residual) << ',' << rate_text << '\n';
    rows.push_back({{"ell", ell}, {"bound", spec.bound()}, {"measured_residual", residual}, {"success_prob", rate}});
  }
  CommandOutput o;
  o.summary = {{"params", params_to_json(p)}, {"gap", r.delta}, {"chosen_ell", base.ell}, {"eps", base.eps},
               {"alpha", base.alpha}, {"delta", base.delta}, {"rows", rows}};
  o.csv = csv.str();
  return o;
}

CommandOutput cmd_quantum(const RunConfig& c) {
  const int workers = resolve_workers(c.workers);
  CommandOutput o;
  if (!c.ns.empty() && c.graph.empty()) {
    // Sweep over tree counts with m = n + 1.
    std::ostringstream csv;
    csv << "d,m,n,trials,success_rate,mean_quantum_model_queries,mean_classical_actual_queries\n";
    json rows = json::array();
    for (int n : c.ns) {
      RunConfig one = c;
      one.params.n = n;
      one.params.m = n + 1;
      const auto g = open_graph(one);
      const QuantumBatch b = quantum_batch(*g, one, workers);
      const double rate = c.trials > 0 ? static_cast<double>(b.successes) / c.trials : 0.0;
      csv << one.params.d << ',' << n + 1 << ',' << n << ',' << c.trials << ',' << num(rate) << ','
          << num(b.mean_model) << ',' << num(b.mean_actual) << '\n';
      rows.push_back({{"n", n}, {"m", n + 1}, {"success_rate", rate}, {"mean_quantum_model_queries", b.mean_model}});
    }
    o.summary = {{"mode", c.mode}, {"rows", rows}};
    o.csv = csv.str();
    return o;
  }
  const auto g = open_graph(c);
  const QuantumBatch b = quantum_batch(*g, c, workers);
  const Interval iv = wilson_interval(b.successes, b.runs.size());
  const PathResult* first = nullptr;
  for (const auto& r : b.runs)
    if (r.success) {
      first = &r;
      break;
    }
  json runs = json::array();
  for (const auto& r : b.runs) runs.push_back(path_result_to_json(r));
  o.summary = {{"params", params_to_json(g->params())},
               {"mode", c.mode},
               {"N_s", b.n_s},
               {"success", first != nullptr},
               {"successes", b.successes},
               {"trials", b.runs.size()},
               {"success_rate", iv.rate},
               {"wilson_low", iv.low},
               {"wilson_high", iv.high},
               {"path", first ? json(first->path) : json::array()},
               {"ledger", b.runs.empty() ? json() : ledger_to_json((first ? *first : b.runs.front()).ledger)},
               {"mean_quantum_model_queries", b.mean_model},
               {"mean_classical_actual_queries", b.mean_actual},
               {"runs", runs}};
  return o;
}

CommandOutput cmd_classical(const RunConfig& c) {
  const int workers = resolve_workers(c.workers);
  const Strategy strategy = parse_strategy(c.strategy);
  const char* model = is_baseline(strategy) ? "baseline" : "lower-bound-model";
  std::ostringstream csv;
  csv << "strategy,model,d,m,n,naux,q,trials,successes,found_t,found_cycle,wilson_low,wilson_high\n";
  json rows = json::array();
  auto emit = [&](const SuccessRow& r) {
    csv << strategy_name(r.strategy) << ',' << model << ',' << r.d << ',' << r.m << ',' << r.n << ',' << r.n_aux << ','
        << r.budget << ',' << r.trials << ',' << r.successes << ',' << r.found_t << ',' << r.found_cycle << ','
        << num(r.rate.low) << ',' << num(r.rate.high) << '\n';
    rows.push_back({{"n", r.n}, {"q", r.budget}, {"successes", r.successes}, {"rate", r.rate.rate}});
  };
  json guess;
  if (!c.graph.empty()) {
    const auto g = load_graph(c.graph);
    const GraphParams& p = g->params();
    ExplorerConfig cfg{strategy, budget_for(p.d, p.n, c.budget_exponent), c.trials, p.seed, true};
    SuccessRow row{strategy, p.d, p.m, p.n, p.n_aux, cfg.budget, c.trials};
    for (const auto& out : run_explorer_trials(*g, cfg, workers)) {
      row.successes += out.success();
      row.found_t += out.found_t;
      row.found_cycle += out.found_cycle;
    }
    row.rate = wilson_interval(row.successes, static_cast<std::uint64_t>(c.trials));
    emit(row);
    const GuessReport gr = guess_hit_rate(*g, 100000, p.seed);
    guess = {{"guesses", gr.guesses}, {"hits", gr.hits}, {"rate", gr.rate}, {"bound", gr.bound}};
  } else {
    for (const auto& r : estimate_success(static_cast<int>(c.params.d), tree_counts(c), c.budget_exponent, strategy,
                                          c.trials, c.params.seed, workers, c.naux))
      emit(r);
  }
  CommandOutput o;
  o.summary = {{"strategy", c.strategy}, {"model", model}, {"rows", rows}};
  if (!guess.is_null()) o.summary["guessed_labels"] = guess;
  o.csv = csv.str();
  return o;
}

CommandOutput cmd_expansion(const RunConfig& c) {
  const int workers = resolve_workers(c.workers);
  CommandOutput o;
  std::ostringstream csv;
  if (!c.bipartite_n.empty()) {
    const CheckMode mode = parse_check_mode(c.check_mode);
    csv << "N,D,draws,mode,delta,pass_fraction_i,pass_fraction_ii,ii_exhaustive\n";
    json rows = json::array();
    for (int N : c.bipartite_n) {
      const BipartiteReport r = bipartite_check(N, c.matchings, c.draws, mode, c.params.seed, workers);
      csv << N << ',' << r.D << ',' << r.draws << ',' << check_mode_name(mode) << ',' << num(r.delta) << ','
          << num(r.rate_i.rate) << ',' << num(r.rate_ii.rate) << ',' << (r.cond_ii_exhaustive ? 1 : 0) << '\n';
      rows.push_back({{"N", N}, {"pass_fraction_i", r.rate_i.rate}, {"pass_fraction_ii", r.rate_ii.rate}});
    }
    o.summary = {{"chi", 2.0 / 3.0}, {"rows", rows}};
    o.csv = csv.str();
    return o;
  }
  const auto g = open_graph(c);
  const GraphParams& p = g->params();
  const GapResult gap = adjacency_gap(*g);
  const ExpansionSample s = vertex_expansion_sample(*g, c.subsets, {}, p.seed);
  csv << "d,m,n,lambda2,gap,gap_log3,method,tree_ratio";
  for (auto size : s.sizes) csv << ",min_ratio_" << size;
  csv << '\n'
      << p.d << ',' << p.m << ',' << p.n << ',' << num(gap.lambda2) << ',' << num(gap.gap) << ','
      << num(gap.normalized) << ',' << gap.method << ',' << num(tree_expansion_ratio(p));
  for (double v : s.min_ratio) csv << ',' << num(v);
  csv << '\n';
  o.summary = {{"params", params_to_json(p)},
               {"lambda1", gap.lambda1},
               {"lambda2", gap.lambda2},
               {"gap", gap.gap},
               {"gap_log3", gap.normalized},
               {"method", gap.method},
               {"min_expansion_ratio", s.overall_min},
               {"subsets", c.subsets}};
  o.csv = csv.str();
  return o;
}

CommandOutput cmd_separation(const RunConfig& c) {
  const int workers = resolve_workers(c.workers);
  const int d = static_cast<int>(c.params.d);
  const Strategy strategy = parse_strategy(c.strategy);
  std::ostringstream csv;
  csv << "d,m,n,naux,q,classical_successes,classical_trials,classical_low,classical_high,quantum_successes,"
         "quantum_trials,quantum_rate,quantum_low,mean_quantum_model_queries\n";
  json rows = json::array();
  for (int n : tree_counts(c)) {
    const GraphParams p = lower_bound_params(d, n, c.params.seed, c.naux);
    const SunflowerGraph g(p, Backend::Implicit);
    ExplorerConfig cfg{strategy, budget_for(d, n, c.budget_exponent), c.trials, p.seed, true};
    std::uint64_t classical = 0;
    for (const auto& out : run_explorer_trials(g, cfg, workers)) classical += out.success();
    const Interval civ = wilson_interval(classical, static_cast<std::uint64_t>(c.trials));
    const QuantumBatch q = quantum_batch(g, c, workers);
    const Interval qiv = wilson_interval(q.successes, static_cast<std::uint64_t>(c.trials));
    csv << d << ',' << p.m << ',' << n << ',' << p.n_aux << ',' << cfg.budget << ',' << classical << ',' << c.trials
        << ',' << num(civ.low) << ',' << num(civ.high) << ',' << q.successes << ',' << c.trials << ','
        << num(qiv.rate) << ',' << num(qiv.low) << ',' << num(q.mean_model) << '\n';
    rows.push_back({{"n", n},
                    {"q", cfg.budget},
                    {"classical_rate", civ.rate},
                    {"quantum_rate", qiv.rate},
                    {"mean_quantum_model_queries", q.mean_model}});
  }
  CommandOutput o;
  o.summary = {{"strategy", c.strategy}, {"mode", c.mode}, {"rows", rows}};
  o.csv = csv.str();
  return o;
}

void run_command(const RunConfig& c) {
  using Fn = CommandOutput (*)(const RunConfig&);
  static const std::pair<const char*, Fn> table[] = {
      {"generate", cmd_generate}, {"spectrum", cmd_spectrum},     {"filter", cmd_filter},
      {"quantum", cmd_quantum},   {"classical", cmd_classical}, {"expansion", cmd_expansion},
      {"separation", cmd_separation}};
  Fn fn = nullptr;
  for (const auto& [name, f] : table)
    if (c.command == name) fn = f;
  if (!fn) throw Error(ErrorCode::DomainError, "unknown command: " + c.command);

  const auto t0 = std::chrono::steady_clock::now();
  const CommandOutput out = fn(c);
  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  // generate writes its artifact to --out and its report to stdout.
  const std::string report_path = c.command == "generate" ? std::string() : c.out;
  std::string format = c.format;
  if (format.empty()) {
    const bool json_name = report_path.size() >= 5 && report_path.compare(report_path.size() - 5, 5, ".json") == 0;
    format = out.csv.empty() || json_name || c.command == "generate" ? "json" : "csv";
  }
  if (format == "csv" && out.csv.empty()) throw Error(ErrorCode::DomainError, c.command + " has no CSV output");

  std::ostringstream text;
  const json cfg = config_to_json(c);
  if (format == "csv") {
    text << "# sunflower " << c.command << " result v" << kResultSchemaVersion << '\n';
    text << "# config: " << cfg.dump() << '\n';
    text << out.csv;
    text << "# wall_time_s: " << num(wall) << '\n';
  } else if (format == "json") {
    json doc = {{"schema", "sunflower.result"},
                {"version", kResultSchemaVersion},
                {"command", c.command},
                {"config", cfg},
                {"result", out.summary},
                {"wall_time_s", wall}};
    text << doc.dump(2) << '\n';
  } else {
    throw Error(ErrorCode::DomainError, "unknown format: " + format);
  }

  if (report_path.empty()) {
    std::cout << text.str();
  } else {
    std::ofstream f(report_path, std::ios::binary);
    if (!f) throw Error(ErrorCode::ArtifactNotFound, "cannot write " + report_path);
    f << text.str();
  }
}

int exit_code_for(const std::exception& e) {
  if (const auto* err = dynamic_cast<const Error*>(&e)) return 10 + static_cast<int>(err->code());
  return 1;
}

}  // namespace sunflower::cli
