// Copyright 2026 The fatghom Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fatghom/serialization.h"

#include <fstream>
#include <string>

namespace fatghom {

namespace fs = std::filesystem;
using nlohmann::json;

json FatgraphToJson(const Fatgraph& g) {
  return {{"vertices", g.ToLists()}, {"orient", g.orientation().positions()}};
}

Fatgraph FatgraphFromJson(const json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array()) {
    throw FatgraphError(ErrorCode::kIo, "fatgraph object needs a \"vertices\" array");
  }
  std::vector<std::vector<EdgeLabel>> lists;
  std::optional<Orientation> orientation;
  try {
    lists = j["vertices"].get<std::vector<std::vector<EdgeLabel>>>();
    if (j.contains("orient")) orientation = Orientation(j["orient"].get<std::vector<int>>());
  } catch (const json::exception& e) {
    throw FatgraphError(ErrorCode::kIo, e.what());
  }
  return Fatgraph::FromLists(lists, std::move(orientation));
}

fs::path CheckpointPath(const fs::path& dir, int g, int n, int m) {
  return dir / ("graphs_g" + std::to_string(g) + "_n" + std::to_string(n) + "_m" +
                std::to_string(m) + ".json");
}

void WriteCheckpoint(const fs::path& dir, int g, int n, int m,
                     const std::vector<Fatgraph>& graphs) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  json doc = {{"schema_version", kCheckpointSchemaVersion},
              {"g", g},
              {"n", n},
              {"m", m},
              {"graphs", json::array()}};
  for (const Fatgraph& graph : graphs) doc["graphs"].push_back(FatgraphToJson(graph));
  const fs::path path = CheckpointPath(dir, g, n, m);
  std::ofstream out(path);
  out << doc.dump() << '\n';
  if (!out) throw FatgraphError(ErrorCode::kIo, "cannot write " + path.string());
}

std::optional<std::vector<Fatgraph>> ReadCheckpoint(const fs::path& dir, int g, int n,
                                                    int m) {
  const fs::path path = CheckpointPath(dir, g, n, m);
  if (!fs::exists(path)) return std::nullopt;
  std::ifstream in(path);
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw FatgraphError(ErrorCode::kIo, path.string() + ": " + e.what());
  }
  if (!doc.is_object() || doc.value("schema_version", -1) != kCheckpointSchemaVersion ||
      doc.value("g", -1) != g || doc.value("n", -1) != n || doc.value("m", -1) != m ||
      !doc.contains("graphs") || !doc["graphs"].is_array()) {
    throw FatgraphError(ErrorCode::kIo, path.string() + ": unexpected header");
  }
  std::vector<Fatgraph> graphs;
  for (const json& entry : doc["graphs"]) graphs.push_back(FatgraphFromJson(entry));
  return graphs;
}

void WriteFamily(const fs::path& dir, const GraphFamily& family) {
  for (const auto& [m, graphs] : family.by_edge_count) {
    WriteCheckpoint(dir, family.g, family.n, m, graphs);
  }
}

std::optional<GraphFamily> ReadFamily(const fs::path& dir, int g, int n) {
  GraphFamily family{g, n, {}};
  for (int m = MinEdges(g, n); m <= MaxEdges(g, n); ++m) {
    std::optional<std::vector<Fatgraph>> bucket = ReadCheckpoint(dir, g, n, m);
    if (!bucket.has_value()) return std::nullopt;
    family.by_edge_count[m] = *std::move(bucket);
  }
  return family;
}

}  // namespace fatghom
