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
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "sunflower/params.hpp"

namespace sunflower::cli {

inline constexpr int kResultSchemaVersion = 1;

/// Everything a subcommand reads. Serialized into every output so a run can be
/// repeated from its own result file.
struct RunConfig {
  std::string command;
  RawParams params;
  std::int64_t naux = -1;  // -1: 0 for single instances, N_G^2 for lower-bound sweeps
  std::string backend = "explicit";
  std::string mode = "ideal";
  std::string strategy = "random-embedding";
  std::string check_mode = "exhaustive";
  int trials = 100;
  double budget_exponent = 0.125;
  double beta = 1.0 / 3.0;
  double eps = 0.0;    // filter error; 0 picks the instance default
  double alpha = 0.0;  // filter normalization; 0 picks d^2
  std::vector<int> ns;
  std::vector<int> ells;
  std::vector<int> bipartite_n;
  int matchings = 3;
  int draws = 200;
  int subsets = 10000;
  std::string graph;   // input artifact
  std::string out;
  std::string format;  // "csv", "json" or empty for the command default
  int workers = 0;     // not part of the result; 0 defers to SUNFLOWER_WORKERS
};

nlohmann::json config_to_json(const RunConfig& c);
/// Missing fields keep the values already in `c`.
void config_from_json(const nlohmann::json& j, RunConfig& c);
/// Read a config file, a JSON result (its "config" member) or a CSV result
/// (its "# config:" header line).
void load_config_file(const std::string& path, RunConfig& c);

struct CommandOutput {
  nlohmann::json summary;
  std::string csv;  // header plus rows; empty for JSON-only commands
};

CommandOutput cmd_generate(const RunConfig& c);
CommandOutput cmd_spectrum(const RunConfig& c);
CommandOutput cmd_filter(const RunConfig& c);
CommandOutput cmd_quantum(const RunConfig& c);
CommandOutput cmd_classical(const RunConfig& c);
CommandOutput cmd_expansion(const RunConfig& c);
CommandOutput cmd_separation(const RunConfig& c);

/// Dispatch on c.command, time it and write the framed result to c.out or stdout.
void run_command(const RunConfig& c);

/// 0 success, 1 unexpected failure, 2 usage, 10 + ErrorCode for library errors.
int exit_code_for(const std::exception& e);

}  // namespace sunflower::cli
