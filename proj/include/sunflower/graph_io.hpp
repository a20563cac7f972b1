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

#include <memory>
#include <string>

#include <nlohmann/json.hpp>

#include "sunflower/graph.hpp"

namespace sunflower {

inline constexpr int kGraphSchemaVersion = 1;

nlohmann::json params_to_json(const GraphParams& p);
GraphParams params_from_json(const nlohmann::json& j);

/// Versioned JSON container: params, seed, label key, endpoints, and for the
/// explicit backend the full adjacency with multiplicity plus a digest.
nlohmann::json graph_to_json(const SunflowerGraph& g);

/// Rebuild a graph from its container and check it against the stored data.
/// Throws ArtifactCorrupt on any mismatch.
std::unique_ptr<SunflowerGraph> graph_from_json(const nlohmann::json& j);

void save_graph(const SunflowerGraph& g, const std::string& path);
/// Throws ArtifactNotFound if the file is missing, ArtifactCorrupt if unreadable.
std::unique_ptr<SunflowerGraph> load_graph(const std::string& path);

}  // namespace sunflower
