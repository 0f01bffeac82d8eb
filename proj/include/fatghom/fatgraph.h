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

// Fatgraph (ribbon graph) data model.
//
// A fatgraph is stored as a list of ciliated vertices: each vertex is the
// list of labels of the edges incident to it, read in the cyclic order at the
// vertex and starting from an arbitrary "cilium". Every other piece of data
// (edge endpoints, boundary cycles, topological invariants) is derived from
// the vertex list when the graph is built. Fatgraph values are immutable.

#ifndef FATGHOM_FATGRAPH_H_
#define FATGHOM_FATGRAPH_H_

#include <array>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

#include "fatghom/error.h"

namespace fatghom {

using EdgeLabel = int;

// A ciliated vertex: position 0 is the cilium. Equality is equality up to
// rotation, i.e. equality of the underlying cyclic sequences.
class Vertex {
 public:
  Vertex() = default;
  explicit Vertex(std::vector<EdgeLabel> labels) : labels_(std::move(labels)) {}
  Vertex(std::initializer_list<EdgeLabel> labels) : labels_(labels) {}

  int valence() const { return static_cast<int>(labels_.size()); }
  EdgeLabel operator[](int i) const { return labels_[i]; }
  // Label at position `i` reduced modulo the valence; `i` may be negative.
  EdgeLabel Cyclic(int i) const;
  const std::vector<EdgeLabel>& labels() const { return labels_; }
  auto begin() const { return labels_.begin(); }
  auto end() const { return labels_.end(); }

  // Number of loops attached, i.e. number of labels occurring twice.
  int num_loops() const;

  // Copy shifted leftwards by `shift` places: result[i] == (*this)[i + shift].
  Vertex Rotated(int shift) const;

  // Shift giving the lexicographically least rotation (earliest on ties).
  int CanonicalShift() const;

  friend bool operator==(const Vertex& a, const Vertex& b);

 private:
  std::vector<EdgeLabel> labels_;
};

// Half-edge address: a vertex index and the attachment index relative to the
// cilium of that vertex.
struct Endpoint {
  int vertex = 0;
  int attachment = 0;

  friend auto operator<=>(const Endpoint&, const Endpoint&) = default;
};

struct Edge {
  // ends[0] is the occurrence met first when scanning vertices in order.
  std::array<Endpoint, 2> ends;

  bool is_loop() const { return ends[0].vertex == ends[1].vertex; }
  Endpoint OtherEnd(const Endpoint& end) const {
    return end == ends[0] ? ends[1] : ends[0];
  }
};

// Two consecutive half-edges at a vertex; outgoing == (incoming + 1) % valence.
struct Corner {
  int vertex = 0;
  int incoming = 0;
  int outgoing = 0;

  friend auto operator<=>(const Corner&, const Corner&) = default;
};

// A boundary cycle as a set of corners. Corners are kept in walk order,
// rotated so that the least (vertex, incoming) corner comes first; equality
// is set equality.
class BoundaryCycle {
 public:
  BoundaryCycle() = default;
  explicit BoundaryCycle(std::vector<Corner> corners);

  const std::vector<Corner>& corners() const { return corners_; }
  int size() const { return static_cast<int>(corners_.size()); }
  bool Contains(const Corner& c) const;

  friend bool operator==(const BoundaryCycle& a, const BoundaryCycle& b) {
    return a.sorted_ == b.sorted_;
  }

 private:
  std::vector<Corner> corners_;
  std::vector<Corner> sorted_;
};

// Total order of the edges: position[e] is the place of edge `e`.
class Orientation {
 public:
  Orientation() = default;
  // Throws kInvalidPermutations unless `position` is a bijection on [0, m).
  explicit Orientation(std::vector<int> position);
  static Orientation Identity(int num_edges);

  int operator[](EdgeLabel e) const { return position_[e]; }
  int size() const { return static_cast<int>(position_.size()); }
  const std::vector<int>& positions() const { return position_; }

  friend bool operator==(const Orientation&, const Orientation&) = default;

 private:
  std::vector<int> position_;
};

// Edge together with a direction: side +1 runs from ends[0] to ends[1].
struct OrientedEdge {
  EdgeLabel edge = 0;
  int side = 1;

  friend auto operator<=>(const OrientedEdge&, const OrientedEdge&) = default;
};

// Cheap isomorphism invariants. Equal signatures are necessary (not
// sufficient) for two fatgraphs to be isomorphic.
struct TopologicalSignature {
  int num_vertices = 0;
  int num_edges = 0;
  int num_boundary_cycles = 0;
  int genus = 0;
  int num_loops = 0;
  std::vector<int> valences;                        // sorted multiset
  std::vector<std::pair<int, int>> loops_by_valence;  // (valence, loops)
  std::vector<std::pair<int, int>> vertex_types;      // sorted (valence, loops)
  std::vector<int> cycle_lengths;                   // sorted corner counts

  friend bool operator==(const TopologicalSignature&,
                         const TopologicalSignature&) = default;
  std::size_t Hash() const;
};

struct SignatureHash {
  std::size_t operator()(const TopologicalSignature& s) const {
    return s.Hash();
  }
};

class Fatgraph {
 public:
  // Validates the label multiset, valences and connectivity, then derives
  // edges, boundary cycles and invariants. When `orientation` is absent the
  // edges are ordered by label.
  static Fatgraph Build(std::vector<Vertex> vertices,
                        std::optional<Orientation> orientation = std::nullopt);
  static Fatgraph FromLists(const std::vector<std::vector<EdgeLabel>>& lists,
                            std::optional<Orientation> orientation = std::nullopt);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const Vertex& vertex(int v) const { return vertices_[v]; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeLabel e) const { return edges_[e]; }
  const std::vector<BoundaryCycle>& boundary_cycles() const { return cycles_; }
  const Orientation& orientation() const { return orientation_; }
  const TopologicalSignature& signature() const { return signature_; }

  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  int num_boundary_cycles() const { return static_cast<int>(cycles_.size()); }
  int genus() const { return signature_.genus; }
  bool is_loop(EdgeLabel e) const { return edges_[e].is_loop(); }

  // Index of `b` in boundary_cycles(), or -1 if `b` is not a cycle of this
  // graph.
  int BoundaryCycleIndex(const BoundaryCycle& b) const;

  // Global half-edge id of an endpoint: vertices are laid out consecutively.
  int HalfEdgeId(const Endpoint& p) const {
    return offsets_[p.vertex] + p.attachment;
  }
  int num_half_edges() const { return 2 * num_edges(); }

  std::vector<std::vector<EdgeLabel>> ToLists() const;

 private:
  Fatgraph() = default;

  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<BoundaryCycle> cycles_;
  Orientation orientation_;
  TopologicalSignature signature_;
  std::vector<int> offsets_;
  std::vector<int> corner_cycle_;  // half-edge id of incoming -> cycle index
};

std::ostream& operator<<(std::ostream& os, const Fatgraph& g);

// Endpoints of every label. Throws kMalformedLabels unless every label in
// [0, m) occurs exactly twice, with m half the total valence.
std::vector<Edge> ComputeEdgeList(std::span<const Vertex> vertices);

// Boundary cycles, found by walking from the first unused corner in vertex
// and attachment order. The returned order is the reference numbering of the
// cycles used by the marking machinery.
std::vector<BoundaryCycle> ComputeBoundaryCycles(std::span<const Vertex> vertices,
                                                 std::span<const Edge> edges);

// Contracts the non-loop edge `e`. The fused vertex is appended last; labels
// and orientation positions above those of `e` shift down by one.
Fatgraph Contract(const Fatgraph& g, EdgeLabel e);

// Image of boundary cycle `b` of `g` in Contract(g, e).
BoundaryCycle ContractBoundaryCycle(const Fatgraph& g, const BoundaryCycle& b,
                                    EdgeLabel e);

inline int MaxEdges(int g, int n) { return 6 * g + 3 * n - 6; }
inline int MinEdges(int g, int n) { return 2 * g + n - 1; }
// True for signatures with negative Euler characteristic and n > 0.
inline bool IsStableSignature(int g, int n) {
  return g >= 0 && n > 0 && 2 - 2 * g - n < 0;
}

}  // namespace fatghom

#endif  // FATGHOM_FATGRAPH_H_
