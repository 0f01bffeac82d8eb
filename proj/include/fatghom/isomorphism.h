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

// Isomorphisms of fatgraphs.
//
// An isomorphism G1 -> G2 is a triple (pv, rot, pe): vertex v of G1 goes to
// vertex pv[v] of G2 with its cilium advanced by rot[v] places, and edge e
// goes to edge pe[e], subject to
//
//   G2.vertex(pv[v])[(j + rot[v]) % z] == pe[G1.vertex(v)[j]]
//
// for every vertex v and position j. Because graphs are connected, fixing the
// image of one vertex together with its rotation determines the whole map, so
// enumeration seeds one vertex and propagates along edges.

#ifndef FATGHOM_ISOMORPHISM_H_
#define FATGHOM_ISOMORPHISM_H_

#include <optional>
#include <utility>
#include <vector>

#include "fatghom/fatgraph.h"

namespace fatghom {

struct Isomorphism {
  std::vector<int> pv;
  std::vector<int> rot;
  std::vector<EdgeLabel> pe;

  friend bool operator==(const Isomorphism&, const Isomorphism&) = default;
};

Isomorphism IdentityIsomorphism(const Fatgraph& g);

// True iff `f` is a bijective, adjacency-preserving map from `g1` to `g2`.
bool IsValidIsomorphism(const Isomorphism& f, const Fatgraph& g1,
                        const Fatgraph& g2);

// Apply f: G1 -> G2 first, then h: G2 -> G3. `g1` supplies the valences.
Isomorphism Compose(const Isomorphism& f, const Isomorphism& h,
                    const Fatgraph& g1);
// Inverse of f: G1 -> G2, as a map G2 -> G1.
Isomorphism Inverse(const Isomorphism& f, const Fatgraph& g1);

// All isomorphisms, ordered by (target of the seed vertex, seed rotation).
std::vector<Isomorphism> Isomorphisms(const Fatgraph& g1, const Fatgraph& g2);
// First element of Isomorphisms(g1, g2), found without enumerating the rest.
std::optional<Isomorphism> FirstIsomorphism(const Fatgraph& g1,
                                            const Fatgraph& g2);
bool AreIsomorphic(const Fatgraph& g1, const Fatgraph& g2);
std::vector<Isomorphism> Automorphisms(const Fatgraph& g);

// Sign of the permutation taking g1's orientation to g2's along f.
int CompareOrientations(const Isomorphism& f, const Fatgraph& g1,
                        const Fatgraph& g2);
bool IsOrientationReversing(const Fatgraph& g, const Isomorphism& a);
bool IsOrientable(const Fatgraph& g);
bool IsOrientable(const Fatgraph& g, const std::vector<Isomorphism>& automorphisms);

// Image of a boundary cycle of `source` under f.
BoundaryCycle TransformBoundaryCycle(const Isomorphism& f,
                                     const Fatgraph& source,
                                     const BoundaryCycle& b);

// Image of an oriented edge: the side flips iff f carries ends[0] of the edge
// onto ends[1] of its image.
OrientedEdge TransformOrientedEdge(const Isomorphism& f, const Fatgraph& source,
                                   const Fatgraph& target, OrientedEdge x);

// Least label of each Aut(g)-orbit on edges, ascending.
std::vector<EdgeLabel> EdgeOrbits(const Fatgraph& g,
                                  const std::vector<Isomorphism>& automorphisms);
std::vector<EdgeLabel> EdgeOrbits(const Fatgraph& g);

// Least member of each Aut(g)-orbit on oriented edges, ascending in
// (edge, side) with side -1 before +1.
std::vector<OrientedEdge> OrientedEdgeOrbits(
    const Fatgraph& g, const std::vector<Isomorphism>& automorphisms);

// One representative per Aut(g)-orbit of ordered pairs of oriented edges.
std::vector<std::pair<OrientedEdge, OrientedEdge>> OrientedEdgePairOrbits(
    const Fatgraph& g, const std::vector<Isomorphism>& automorphisms);
std::vector<std::pair<OrientedEdge, OrientedEdge>> OrientedEdgePairOrbits(
    const Fatgraph& g);

// The first isomorphism g1 -> g2 whose edge map is `eta`. Distinct
// isomorphisms may share an edge map (a vertex swap fixing every edge), in
// which case the one with the lowest seed image and rotation is returned.
// Throws kNotIncidencePreserving if no isomorphism has edge map `eta`.
Isomorphism IsoFromEdgeMap(const Fatgraph& g1, const Fatgraph& g2,
                           const std::vector<EdgeLabel>& eta);

}  // namespace fatghom

#endif  // FATGHOM_ISOMORPHISM_H_
