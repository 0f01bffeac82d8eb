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

// JSON encoding of fatgraphs and per-bucket checkpoint files.
//
// A fatgraph is {"vertices": [[...], ...], "orient": [...]}, with "orient"
// the position of each edge. A checkpoint holds one edge-count bucket of a
// family:
//
//   {"schema_version": 1, "g": 0, "n": 4, "m": 6, "graphs": [...]}

#ifndef FATGHOM_SERIALIZATION_H_
#define FATGHOM_SERIALIZATION_H_

#include <filesystem>
#include <optional>
#include <vector>

#include "fatghom/fatgraph.h"
#include "fatghom/generation.h"
#include "json.hpp"

namespace fatghom {

inline constexpr int kCheckpointSchemaVersion = 1;

nlohmann::json FatgraphToJson(const Fatgraph& g);
// Throws kIo on a malformed document, or the build error of the graph.
Fatgraph FatgraphFromJson(const nlohmann::json& j);

std::filesystem::path CheckpointPath(const std::filesystem::path& dir, int g, int n,
                                     int m);

// Throws kIo if the file cannot be written.
void WriteCheckpoint(const std::filesystem::path& dir, int g, int n, int m,
                     const std::vector<Fatgraph>& graphs);
// nullopt if the file does not exist. Throws kIo on unreadable or
// mismatching content.
std::optional<std::vector<Fatgraph>> ReadCheckpoint(const std::filesystem::path& dir,
                                                    int g, int n, int m);

void WriteFamily(const std::filesystem::path& dir, const GraphFamily& family);
// nullopt unless every bucket of (g, n) has a checkpoint.
std::optional<GraphFamily> ReadFamily(const std::filesystem::path& dir, int g, int n);

}  // namespace fatghom

#endif  // FATGHOM_SERIALIZATION_H_
