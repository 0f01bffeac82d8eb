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

// Enumeration of fatgraphs with prescribed genus and number of boundary
// cycles.
//
// Trivalent graphs are grown recursively: a graph with boundary count n
// arises either by hanging a slip knot (a loop on a stem) off an edge of a
// graph with n - 1 boundary cycles, or by bridging two edge midpoints of a
// graph of type (g, n - 1) or (g - 1, n + 1). Graphs with fewer edges are
// obtained by contracting edges of the trivalent ones.

#ifndef FATGHOM_GENERATION_H_
#define FATGHOM_GENERATION_H_

#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "fatghom/fatgraph.h"

namespace fatghom {

// Labels m, m+1, m+2 are new. The edge x keeps its ends[0] half and the new
// label m takes over its ends[1] half; the midpoint vertex lists the half
// toward ends[0] first when x.side is +1.
Fatgraph AttachSlipknot(const Fatgraph& g, OrientedEdge x);

// Joins the midpoints of x and y by the new edge m+2. When x.edge == y.edge
// two midpoints are placed on the same edge.
Fatgraph BridgeEdges(const Fatgraph& g, OrientedEdge x, OrientedEdge y);

// Keeps one graph per isomorphism class, in first-seen order. Candidates are
// bucketed by signature and compared only within a bucket.
class IsomorphismClassifier {
 public:
  // Index of a stored graph isomorphic to `g`, if any.
  std::optional<int> Find(const Fatgraph& g) const;
  // Stores `g` unless an isomorphic graph is already present. Returns the
  // index of the class representative.
  int Insert(Fatgraph g);

  const std::vector<Fatgraph>& graphs() const { return graphs_; }
  std::vector<Fatgraph> TakeGraphs() && { return std::move(graphs_); }

 private:
  std::vector<Fatgraph> graphs_;
  std::unordered_map<TopologicalSignature, std::vector<int>, SignatureHash>
      buckets_;
};

std::vector<Fatgraph> DedupIsomorphs(const std::vector<Fatgraph>& graphs);

// Trivalent fatgraphs of type (g, n), one per isomorphism class. Empty for
// n == 0 and for types below (0, 3). Results are cached per process.
std::vector<Fatgraph> MgnTrivalentGraphs(int g, int n);

struct GraphFamily {
  int g = 0;
  int n = 0;
  std::map<int, std::vector<Fatgraph>> by_edge_count;

  int total() const;
};

// All fatgraphs of type (g, n) bucketed by edge count. Lower buckets carry
// the orientation inherited through contraction. Throws kInvalidSignature
// unless 2 - 2g - n < 0 and n > 0.
GraphFamily MgnGraphs(int g, int n);

struct OracleOptions {
  int max_half_edges = 12;
  // Enumerate every sigma0 that is a product of 3-cycles. Otherwise sigma0 is
  // fixed to (0 1 2)(3 4 5)..., which reaches every class since any two such
  // products are conjugate.
  bool all_sigma0 = false;
};

// Trivalent graphs of type (g, n) with m edges, by brute force over
// permutation pairs (sigma0, sigma1). Throws kInfeasibleSize when 2m exceeds
// the guard or is not a multiple of 3.
std::vector<Fatgraph> OracleGenerateFromPermutations(int g, int n, int m,
                                                     const OracleOptions& options = {});

}  // namespace fatghom

#endif  // FATGHOM_GENERATION_H_
