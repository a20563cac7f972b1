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

// sunflower: command-line front end for the experiments.

#include <functional>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11/CLI11.hpp>

#include "commands.hpp"
#include "sunflower/errors.hpp"
#include "sunflower/params.hpp"

namespace {

using sunflower::cli::RunConfig;

// Flags are parsed into scratch storage and copied into the config only when
// given, so that they override the config file rather than its defaults.
class Overrides {
 public:
  template <class T>
  void add(CLI::App* app, const std::string& flag, std::function<void(RunConfig&, const T&)> set,
           const std::string& help) {
    auto value = std::make_shared<T>();
    CLI::Option* opt = app->add_option(flag, *value, help);
    if constexpr (std::is_same_v<T, std::vector<int>>) opt->delimiter(',');
    apply_.push_back([opt, value, set](RunConfig& c) {
      if (opt->count() > 0) set(c, *value);
    });
  }
  void apply(RunConfig& c) const {
    for (const auto& f : apply_) f(c);
  }

 private:
  std::vector<std::function<void(RunConfig&)>> apply_;
};

template <class T>
std::function<void(RunConfig&, const T&)> field(T RunConfig::*member) {
  return [member](RunConfig& c, const T& v) { c.*member = v; };
}

void add_instance_flags(CLI::App* app, Overrides& o) {
  o.add<std::int64_t>(app, "--d", [](RunConfig& c, const std::int64_t& v) { c.params.d = v; }, "degree (odd, >= 3)");
  o.add<std::int64_t>(app, "--m", [](RunConfig& c, const std::int64_t& v) { c.params.m = v; }, "tree height (odd, >= 3)");
  o.add<std::int64_t>(app, "--n", [](RunConfig& c, const std::int64_t& v) { c.params.n = v; },
                      "tree count (multiple of 4)");
  o.add<std::int64_t>(app, "--naux", field(&RunConfig::naux), "isolated padding vertices");
  o.add<std::uint64_t>(app, "--seed", [](RunConfig& c, const std::uint64_t& v) { c.params.seed = v; }, "seed");
  o.add<std::string>(app, "--backend", field(&RunConfig::backend), "explicit | implicit");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sunflower graph pathfinding experiments"};
  app.require_subcommand(1);
  std::string config_path;
  Overrides o;

  struct Sub {
    const char* name;
    const char* help;
  };
  const Sub subs[] = {{"generate", "build a graph and write its artifact"},
                      {"spectrum", "factorized spectrum of the effective Hamiltonian"},
                      {"filter", "eigenstate filter residuals and success over a degree grid"},
                      {"quantum", "sampling algorithm runs with the query ledger"},
                      {"classical", "oracle-only explorers under the lower-bound budget"},
                      {"expansion", "adjacency gap, sampled vertex expansion, bipartite checks"},
                      {"separation", "joint quantum / classical table over tree counts"}};

  std::vector<CLI::App*> apps;
  for (const auto& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("--config", config_path, "JSON config, or a previous result to re-run");
    add_instance_flags(sub, o);
    o.add<std::string>(sub, "--out", field(&RunConfig::out), "output path (stdout if absent)");
    o.add<std::string>(sub, "--format", field(&RunConfig::format), "csv | json");
    o.add<int>(sub, "--workers", field(&RunConfig::workers), "worker threads (else SUNFLOWER_WORKERS)");
    o.add<int>(sub, "--trials", field(&RunConfig::trials), "repetitions");
    o.add<std::string>(sub, "--graph", field(&RunConfig::graph), "graph artifact to load");
    apps.push_back(sub);
  }
  auto find = [&](const char* name) { return app.get_subcommand(name); };

  for (const char* name : {"filter", "quantum", "separation"}) {
    o.add<double>(find(name), "--eps", field(&RunConfig::eps), "filter error (default p_min ||Pi0 e_s|| / 4)");
    o.add<double>(find(name), "--alpha", field(&RunConfig::alpha), "filter normalization (default d^2)");
    o.add<double>(find(name), "--beta", field(&RunConfig::beta), "failure probability for N_s");
  }
  o.add<std::vector<int>>(find("filter"), "--ells", field(&RunConfig::ells), "filter half-degrees");
  for (const char* name : {"quantum", "separation"})
    o.add<std::string>(find(name), "--mode", field(&RunConfig::mode), "ideal | filtered");
  for (const char* name : {"quantum", "classical", "separation"})
    o.add<std::vector<int>>(find(name), "--ns", field(&RunConfig::ns), "tree-count sweep (m = n + 1)");
  for (const char* name : {"classical", "separation"}) {
    o.add<double>(find(name), "--budget-exponent", field(&RunConfig::budget_exponent), "c in q = (d-1)^(c n)");
    o.add<std::string>(find(name), "--strategy", field(&RunConfig::strategy),
                       "random-embedding | random-walk | breadth-first");
  }
  CLI::App* exp = find("expansion");
  o.add<std::vector<int>>(exp, "--bipartite-n", field(&RunConfig::bipartite_n), "bipartite sizes N");
  o.add<int>(exp, "--matchings", field(&RunConfig::matchings), "matchings D per bipartite graph");
  o.add<int>(exp, "--draws", field(&RunConfig::draws), "bipartite graph draws");
  o.add<std::string>(exp, "--check-mode", field(&RunConfig::check_mode), "exhaustive | monte-carlo");
  o.add<int>(exp, "--subsets", field(&RunConfig::subsets), "connected subsets to sample");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    RunConfig cfg;
    for (CLI::App* sub : apps)
      if (sub->parsed()) cfg.command = sub->get_name();
    if (!config_path.empty()) sunflower::cli::load_config_file(config_path, cfg);
    o.apply(cfg);
    sunflower::cli::run_command(cfg);
    return 0;
  } catch (const sunflower::InvalidParamsError& e) {
    std::cerr << "error: invalid parameters:";
    for (auto v : e.violations()) std::cerr << ' ' << sunflower::violation_name(v);
    std::cerr << '\n';
    return sunflower::cli::exit_code_for(e);
  } catch (const sunflower::Error& e) {
    std::cerr << "error [" << sunflower::error_code_name(e.code()) << "]: " << e.what() << '\n';
    return sunflower::cli::exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
