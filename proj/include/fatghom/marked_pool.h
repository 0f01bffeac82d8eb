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

// Markings of a fatgraph up to automorphism.
//
// A marking numbers the boundary cycles: marking sigma gives cycle i (in the
// order of Fatgraph::boundary_cycles()) the number sigma[i]. An automorphism
// a carries (G, sigma) to (G, sigma o Phi(a)^-1), where Phi(a) is the induced
// permutation of the cycles. Markings up to automorphism are therefore the
// right cosets sigma P of the group P = Phi(Aut G) in S_n.

#ifndef FATGHOM_MARKED_POOL_H_
#define FATGHOM_MARKED_POOL_H_

#include <cstdint>
#include <utility>
#include <vector>

#include "fatghom/fatgraph.h"
#include "fatghom/isomorphism.h"
#include "fatghom/permutation.h"

namespace fatghom {

// Phi(a)[i] is the index of a(cycle i). Throws kCycleNotFound if a transported
// cycle is not a boundary cycle of `g`.
Permutation Phi(const Isomorphism& a, const Fatgraph& g);

struct MarkedFatgraphPool {
  Fatgraph graph;
  // Distinct elements of Phi(Aut G), with witnesses A[i] such that
  // P[i] == Phi(A[i]) and the orientation sign of each witness.
  std::vector<Permutation> P;
  std::vector<Isomorphism> A;
  std::vector<int> aut_sign;
  // Least element (lexicographic) of each coset sigma P, in increasing order.
  std::vector<Permutation> markings;
  // False iff an orientation-reversing automorphism fixes every cycle; such
  // a marked graph is its own negative and spans nothing.
  bool orientable = true;
  // Number of automorphisms of the unmarked graph.
  int num_automorphisms = 0;
  // coset_of[rank(tau)] = (j, i) with tau == markings[j] o P[i].
  std::vector<std::pair<int, int>> coset_of;

  int num_markings() const { return static_cast<int>(markings.size()); }
};

MarkedFatgraphPool MakeMarkedFatgraphPool(Fatgraph g);

struct CosetHit {
  int index = 0;      // marking index j
  int aut_index = 0;  // witness A[aut_index]
  int sign = 1;       // orientation sign of the witness
};

// Locates the marking equivalent to `sigma`: sigma == markings[j] o P[i] for
// the returned j and i.
CosetHit IndexAndAut(const MarkedFatgraphPool& pool, const Permutation& sigma);

struct BlockEntry {
  int source = 0;  // marking index on the contracted-from graph
  int target = 0;  // marking index on the contracted-to graph
  int sign = 1;

  friend bool operator==(const BlockEntry&, const BlockEntry&) = default;
};

// Coefficients of the contraction of edge e of p1.graph onto p2.graph, one
// per marking of p1. Empty when the contraction is not isomorphic to
// p2.graph. Throws kLoopContraction if e is a loop.
std::vector<BlockEntry> ComputeBlock(const MarkedFatgraphPool& p1, EdgeLabel e,
                                     const MarkedFatgraphPool& p2);

// As above with the contraction `contracted` = Contract(p1.graph, e) and an
// isomorphism f2 from it to p2.graph already at hand.
std::vector<BlockEntry> ComputeBlock(const MarkedFatgraphPool& p1, EdgeLabel e,
                                     const Fatgraph& contracted,
                                     const Isomorphism& f2,
                                     const MarkedFatgraphPool& p2);

}  // namespace fatghom

#endif  // FATGHOM_MARKED_POOL_H_
