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

#include "fatghom/fatgraph.h"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

#include "union_find.h"

namespace fatghom {

namespace {

void HashCombine(std::size_t& seed, std::size_t value) {
  seed ^= value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

int Mod(int a, int z) { return ((a % z) + z) % z; }

bool IsConnected(int num_vertices, std::span<const Edge> edges) {
  internal::UnionFind sets(num_vertices);
  int components = num_vertices;
  for (const Edge& e : edges) {
    if (sets.Union(e.ends[0].vertex, e.ends[1].vertex)) --components;
  }
  return components == 1;
}

}  // namespace

EdgeLabel Vertex::Cyclic(int i) const { return labels_[Mod(i, valence())]; }

int Vertex::num_loops() const {
  int loops = 0;
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    for (std::size_t j = i + 1; j < labels_.size(); ++j) {
      if (labels_[i] == labels_[j]) ++loops;
    }
  }
  return loops;
}

Vertex Vertex::Rotated(int shift) const {
  const int z = valence();
  std::vector<EdgeLabel> out(z);
  for (int i = 0; i < z; ++i) out[i] = labels_[Mod(i + shift, z)];
  return Vertex(std::move(out));
}

int Vertex::CanonicalShift() const {
  const int z = valence();
  int best = 0;
  for (int s = 1; s < z; ++s) {
    for (int i = 0; i < z; ++i) {
      EdgeLabel a = labels_[(s + i) % z];
      EdgeLabel b = labels_[(best + i) % z];
      if (a != b) {
        if (a < b) best = s;
        break;
      }
    }
  }
  return best;
}

bool operator==(const Vertex& a, const Vertex& b) {
  if (a.valence() != b.valence()) return false;
  const int z = a.valence();
  if (z == 0) return true;
  const int sa = a.CanonicalShift();
  const int sb = b.CanonicalShift();
  for (int i = 0; i < z; ++i) {
    if (a.labels_[(sa + i) % z] != b.labels_[(sb + i) % z]) return false;
  }
  return true;
}

BoundaryCycle::BoundaryCycle(std::vector<Corner> corners)
    : corners_(std::move(corners)) {
  if (!corners_.empty()) {
    auto least = std::min_element(corners_.begin(), corners_.end());
    std::rotate(corners_.begin(), least, corners_.end());
  }
  sorted_ = corners_;
  std::sort(sorted_.begin(), sorted_.end());
}

bool BoundaryCycle::Contains(const Corner& c) const {
  return std::binary_search(sorted_.begin(), sorted_.end(), c);
}

Orientation::Orientation(std::vector<int> position)
    : position_(std::move(position)) {
  std::vector<bool> seen(position_.size(), false);
  for (int p : position_) {
    if (p < 0 || p >= static_cast<int>(position_.size()) || seen[p]) {
      throw FatgraphError(ErrorCode::kInvalidPermutations,
                          "orientation is not a permutation of edge positions");
    }
    seen[p] = true;
  }
}

Orientation Orientation::Identity(int num_edges) {
  std::vector<int> p(num_edges);
  std::iota(p.begin(), p.end(), 0);
  return Orientation(std::move(p));
}

std::size_t TopologicalSignature::Hash() const {
  std::size_t h = 0;
  for (int x : {num_vertices, num_edges, num_boundary_cycles, genus, num_loops}) {
    HashCombine(h, std::hash<int>{}(x));
  }
  for (const auto& [z, loops] : vertex_types) {
    HashCombine(h, std::hash<int>{}(z * 64 + loops));
  }
  for (int c : cycle_lengths) HashCombine(h, std::hash<int>{}(c));
  return h;
}

std::vector<Edge> ComputeEdgeList(std::span<const Vertex> vertices) {
  int total = 0;
  for (const Vertex& v : vertices) total += v.valence();
  if (total % 2 != 0) {
    throw FatgraphError(ErrorCode::kMalformedLabels, "total valence is odd");
  }
  const int m = total / 2;
  std::vector<std::vector<Endpoint>> ends(m);
  for (int v = 0; v < static_cast<int>(vertices.size()); ++v) {
    for (int a = 0; a < vertices[v].valence(); ++a) {
      const EdgeLabel e = vertices[v][a];
      if (e < 0 || e >= m) {
        throw FatgraphError(ErrorCode::kMalformedLabels,
                            "label " + std::to_string(e) + " outside [0, " +
                                std::to_string(m) + ")");
      }
      ends[e].push_back({v, a});
    }
  }
  std::vector<Edge> edges(m);
  for (int e = 0; e < m; ++e) {
    if (ends[e].size() != 2) {
      throw FatgraphError(ErrorCode::kMalformedLabels,
                          "label " + std::to_string(e) + " occurs " +
                              std::to_string(ends[e].size()) + " times");
    }
    edges[e].ends = {ends[e][0], ends[e][1]};
  }
  return edges;
}

std::vector<BoundaryCycle> ComputeBoundaryCycles(std::span<const Vertex> vertices,
                                                 std::span<const Edge> edges) {
  std::vector<std::vector<bool>> used(vertices.size());
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    used[v].assign(vertices[v].valence(), false);
  }
  std::vector<BoundaryCycle> result;
  for (int l = 0; l < static_cast<int>(vertices.size()); ++l) {
    for (int i0 = 0; i0 < vertices[l].valence(); ++i0) {
      if (used[l][i0]) continue;
      std::vector<Corner> triples;
      Endpoint at{l, i0};
      do {
        const int z = vertices[at.vertex].valence();
        const int j = (at.attachment + 1) % z;
        triples.push_back({at.vertex, at.attachment, j});
        used[at.vertex][at.attachment] = true;
        const Edge& e = edges[vertices[at.vertex][j]];
        at = e.OtherEnd({at.vertex, j});
      } while (!(at.vertex == l && at.attachment == i0));
      result.emplace_back(std::move(triples));
    }
  }
  return result;
}

Fatgraph Fatgraph::Build(std::vector<Vertex> vertices,
                         std::optional<Orientation> orientation) {
  if (vertices.empty()) {
    throw FatgraphError(ErrorCode::kEmptyGraph, "no vertices");
  }
  Fatgraph g;
  g.edges_ = ComputeEdgeList(vertices);
  for (const Vertex& v : vertices) {
    if (v.valence() < 3) {
      throw FatgraphError(ErrorCode::kLowValence,
                          "vertex of valence " + std::to_string(v.valence()));
    }
  }
  if (!IsConnected(static_cast<int>(vertices.size()), g.edges_)) {
    throw FatgraphError(ErrorCode::kDisconnected, "graph is not connected");
  }
  const int m = static_cast<int>(g.edges_.size());
  if (orientation.has_value()) {
    if (orientation->size() != m) {
      throw FatgraphError(ErrorCode::kInvalidPermutations,
                          "orientation size does not match edge count");
    }
    g.orientation_ = std::move(*orientation);
  } else {
    g.orientation_ = Orientation::Identity(m);
  }
  g.vertices_ = std::move(vertices);
  g.cycles_ = ComputeBoundaryCycles(g.vertices_, g.edges_);

  g.offsets_.resize(g.vertices_.size());
  int offset = 0;
  for (std::size_t v = 0; v < g.vertices_.size(); ++v) {
    g.offsets_[v] = offset;
    offset += g.vertices_[v].valence();
  }
  g.corner_cycle_.assign(offset, -1);
  for (int c = 0; c < static_cast<int>(g.cycles_.size()); ++c) {
    for (const Corner& corner : g.cycles_[c].corners()) {
      g.corner_cycle_[g.offsets_[corner.vertex] + corner.incoming] = c;
    }
  }

  TopologicalSignature& s = g.signature_;
  s.num_vertices = static_cast<int>(g.vertices_.size());
  s.num_edges = m;
  s.num_boundary_cycles = static_cast<int>(g.cycles_.size());
  // l - m + n = 2 - 2g; always even for a valid combinatorial map.
  s.genus = (2 - s.num_vertices + s.num_edges - s.num_boundary_cycles) / 2;
  for (const Vertex& v : g.vertices_) {
    const int loops = v.num_loops();
    s.num_loops += loops;
    s.valences.push_back(v.valence());
    s.vertex_types.emplace_back(v.valence(), loops);
  }
  std::sort(s.valences.begin(), s.valences.end());
  std::sort(s.vertex_types.begin(), s.vertex_types.end());
  for (const auto& [z, loops] : s.vertex_types) {
    if (s.loops_by_valence.empty() || s.loops_by_valence.back().first != z) {
      s.loops_by_valence.emplace_back(z, 0);
    }
    s.loops_by_valence.back().second += loops;
  }
  for (const BoundaryCycle& b : g.cycles_) s.cycle_lengths.push_back(b.size());
  std::sort(s.cycle_lengths.begin(), s.cycle_lengths.end());
  return g;
}

Fatgraph Fatgraph::FromLists(const std::vector<std::vector<EdgeLabel>>& lists,
                             std::optional<Orientation> orientation) {
  std::vector<Vertex> vertices;
  vertices.reserve(lists.size());
  for (const auto& l : lists) vertices.emplace_back(l);
  return Build(std::move(vertices), std::move(orientation));
}

int Fatgraph::BoundaryCycleIndex(const BoundaryCycle& b) const {
  if (b.size() == 0) return -1;
  const Corner& first = b.corners().front();
  if (first.vertex < 0 || first.vertex >= num_vertices() || first.incoming < 0 ||
      first.incoming >= vertices_[first.vertex].valence()) {
    return -1;
  }
  const int c = corner_cycle_[offsets_[first.vertex] + first.incoming];
  return (c >= 0 && cycles_[c] == b) ? c : -1;
}

std::vector<std::vector<EdgeLabel>> Fatgraph::ToLists() const {
  std::vector<std::vector<EdgeLabel>> out;
  out.reserve(vertices_.size());
  for (const Vertex& v : vertices_) out.push_back(v.labels());
  return out;
}

std::ostream& operator<<(std::ostream& os, const Fatgraph& g) {
  os << '[';
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (v > 0) os << ", ";
    os << '[';
    for (int a = 0; a < g.vertex(v).valence(); ++a) {
      if (a > 0) os << ", ";
      os << g.vertex(v)[a];
    }
    os << ']';
  }
  return os << ']';
}

Fatgraph Contract(const Fatgraph& g, EdgeLabel e) {
  const Edge& edge = g.edge(e);
  if (edge.is_loop()) {
    throw FatgraphError(ErrorCode::kLoopContraction,
                        "edge " + std::to_string(e) + " is a loop");
  }
  const auto [v1, a1] = edge.ends[0];
  const auto [v2, a2] = edge.ends[1];
  auto relabel = [e](EdgeLabel x) { return x > e ? x - 1 : x; };

  std::vector<Vertex> out;
  out.reserve(g.num_vertices() - 1);
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (v == v1 || v == v2) continue;
    std::vector<EdgeLabel> labels;
    labels.reserve(g.vertex(v).valence());
    for (EdgeLabel x : g.vertex(v)) labels.push_back(relabel(x));
    out.emplace_back(std::move(labels));
  }
  const Vertex& w1 = g.vertex(v1);
  const Vertex& w2 = g.vertex(v2);
  std::vector<EdgeLabel> fused;
  fused.reserve(w1.valence() + w2.valence() - 2);
  for (int k = 1; k < w1.valence(); ++k) fused.push_back(relabel(w1.Cyclic(a1 + k)));
  for (int k = 1; k < w2.valence(); ++k) fused.push_back(relabel(w2.Cyclic(a2 + k)));
  out.emplace_back(std::move(fused));

  const int h = g.orientation()[e];
  std::vector<int> position;
  position.reserve(g.num_edges() - 1);
  for (EdgeLabel x = 0; x < g.num_edges(); ++x) {
    if (x == e) continue;
    const int p = g.orientation()[x];
    position.push_back(p < h ? p : p - 1);
  }
  return Fatgraph::Build(std::move(out), Orientation(std::move(position)));
}

BoundaryCycle ContractBoundaryCycle(const Fatgraph& g, const BoundaryCycle& b,
                                    EdgeLabel e) {
  const Edge& edge = g.edge(e);
  if (edge.is_loop()) {
    throw FatgraphError(ErrorCode::kLoopContraction,
                        "edge " + std::to_string(e) + " is a loop");
  }
  const auto [v1, a1] = edge.ends[0];
  const auto [v2, a2] = edge.ends[1];
  const int z1 = g.vertex(v1).valence();
  const int z2 = g.vertex(v2).valence();
  const int fused = g.num_vertices() - 2;
  const int zf = z1 + z2 - 2;
  auto reindex = [&](int v) { return v - (v > v1 ? 1 : 0) - (v > v2 ? 1 : 0); };

  std::vector<Corner> out;
  out.reserve(b.size());
  for (const Corner& c : b.corners()) {
    int incoming;
    if (c.vertex == v1) {
      if (c.incoming == a1) continue;
      incoming = Mod(c.incoming - a1 - 1, z1);
    } else if (c.vertex == v2) {
      if (c.incoming == a2) continue;
      incoming = z1 - 1 + Mod(c.incoming - a2 - 1, z2);
    } else {
      out.push_back({reindex(c.vertex), c.incoming, c.outgoing});
      continue;
    }
    out.push_back({fused, incoming, (incoming + 1) % zf});
  }
  return BoundaryCycle(std::move(out));
}

}  // namespace fatghom
