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

#include "sunflower/graph_io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

namespace sunflower {

using nlohmann::json;

namespace {

std::string hex64(std::uint64_t x) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(x));
  return buf;
}

// FNV-1a over the adjacency rows; detects edits to the stored lists.
std::uint64_t adjacency_digest(const json& adjacency) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&](std::uint64_t x) {
    for (int b = 0; b < 8; ++b) {
      h ^= (x >> (8 * b)) & 0xff;
      h *= 0x100000001b3ULL;
    }
  };
  for (const auto& row : adjacency) {
    mix(row.at(0).get<std::uint64_t>());
    for (const auto& w : row.at(1)) mix(w.get<std::uint64_t>());
    mix(~std::uint64_t{0});
  }
  return h;
}

json adjacency_rows(const SunflowerGraph& g) {
  json rows = json::array();
  const auto& off = g.csr_offsets();
  const auto& tgt = g.csr_targets();
  for (std::uint64_t v = 0; v < g.params().graph_vertex_count(); ++v) {
    json nb = json::array();
    for (std::uint64_t e = off[v]; e < off[v + 1]; ++e) nb.push_back(g.label_of_index(tgt[e]));
    rows.push_back(json::array({g.label_of_index(v), std::move(nb)}));
  }
  return rows;
}

[[noreturn]] void corrupt(const std::string& why) { throw Error(ErrorCode::ArtifactCorrupt, "graph artifact: " + why); }

}  // namespace

json params_to_json(const GraphParams& p) {
  return {{"d", p.d}, {"m", p.m}, {"n", p.n}, {"n_aux", p.n_aux}, {"seed", p.seed}};
}

GraphParams params_from_json(const json& j) {
  RawParams raw;
  raw.d = j.at("d").get<std::int64_t>();
  raw.m = j.at("m").get<std::int64_t>();
  raw.n = j.at("n").get<std::int64_t>();
  raw.n_aux = j.value("n_aux", std::int64_t{0});
  raw.seed = j.value("seed", std::uint64_t{0});
  return validate_params(raw);
}

json graph_to_json(const SunflowerGraph& g) {
  json j;
  j["schema"] = "sunflower.graph";
  j["version"] = kGraphSchemaVersion;
  j["params"] = params_to_json(g.params());
  j["backend"] = std::string(backend_name(g.backend()));
  j["label_bits"] = g.label_bits();
  j["label_key"] = hex64(g.label_key());
  j["s_label"] = g.s_label();
  j["t_label"] = g.t_label();
  j["graph_vertices"] = g.params().graph_vertex_count();
  if (g.backend() == Backend::Explicit) {
    json rows = adjacency_rows(g);
    j["adjacency_digest"] = hex64(adjacency_digest(rows));
    j["adjacency"] = std::move(rows);
  }
  return j;
}

std::unique_ptr<SunflowerGraph> graph_from_json(const json& j) {
  std::unique_ptr<SunflowerGraph> g;
  try {
    if (j.at("schema") != "sunflower.graph") corrupt("unexpected schema");
    if (j.at("version").get<int>() != kGraphSchemaVersion) corrupt("unsupported version");
    const GraphParams p = params_from_json(j.at("params"));
    g = std::make_unique<SunflowerGraph>(p, parse_backend(j.at("backend").get<std::string>()));
    if (j.at("label_key").get<std::string>() != hex64(g->label_key())) corrupt("label key mismatch");
    if (j.at("s_label").get<Label>() != g->s_label() || j.at("t_label").get<Label>() != g->t_label()) {
      corrupt("endpoint labels mismatch");
    }
    if (g->backend() == Backend::Explicit) {
      const json& rows = j.at("adjacency");
      if (j.at("adjacency_digest").get<std::string>() != hex64(adjacency_digest(rows))) corrupt("digest mismatch");
      if (rows != adjacency_rows(*g)) corrupt("adjacency does not match the rebuilt graph");
    }
  } catch (const json::exception& e) {
    corrupt(e.what());
  }
  return g;
}

void save_graph(const SunflowerGraph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::ArtifactNotFound, "cannot open for writing: " + path);
  out << graph_to_json(g).dump() << '\n';
}

std::unique_ptr<SunflowerGraph> load_graph(const std::string& path) {
  if (!std::filesystem::exists(path)) throw Error(ErrorCode::ArtifactNotFound, "no such graph artifact: " + path);
  std::ifstream in(path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    corrupt(e.what());
  }
  return graph_from_json(j);
}

}  // namespace sunflower
