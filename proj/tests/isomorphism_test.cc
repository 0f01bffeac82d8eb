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

#include "fatghom/isomorphism.h"

#include <algorithm>
#include <set>

#include "fatghom/generation.h"
#include "gtest/gtest.h"
#include "support/testing.h"

namespace fatghom {
namespace {

const Fatgraph Theta03() { return Fatgraph::FromLists({{0, 1, 2}, {2, 1, 0}}); }
const Fatgraph Theta11() { return Fatgraph::FromLists({{0, 1, 2}, {0, 1, 2}}); }
const Fatgraph Interlaced() { return Fatgraph::FromLists({{0, 1, 0, 1}}); }
const Fatgraph TwoLoops() { return Fatgraph::FromLists({{0, 0, 1, 1}}); }

// The automorphism rotating the single vertex by `r` places.
Isomorphism Rotation(const std::vector<Isomorphism>& autos, int r) {
  for (const Isomorphism& a : autos) {
    if (a.rot[0] == r) return a;
  }
  ADD_FAILURE() << "no rotation by " << r;
  return {};
}

TEST(IsomorphismTest, IdentityAlwaysPresent) {
  for (const Fatgraph& g : {Theta03(), Theta11(), Interlaced(), TwoLoops()}) {
    const std::vector<Isomorphism> isos = Isomorphisms(g, g);
    EXPECT_NE(std::find(isos.begin(), isos.end(), IdentityIsomorphism(g)), isos.end());
    // The identity seed comes first.
    EXPECT_EQ(isos.front(), IdentityIsomorphism(g));
  }
}

TEST(IsomorphismTest, DifferentBoundaryCountShortCircuits) {
  EXPECT_TRUE(Isomorphisms(Theta03(), Theta11()).empty());
  EXPECT_FALSE(FirstIsomorphism(Theta03(), Theta11()).has_value());
}

TEST(IsomorphismTest, Theta11HasSixAutomorphisms) {
  EXPECT_EQ(Automorphisms(Theta11()).size(), 6u);
  EXPECT_EQ(testing::BruteForceIsomorphisms(Theta11(), Theta11()).size(), 6u);
}

TEST(IsomorphismTest, OneVertexAutomorphismCounts) {
  EXPECT_EQ(Automorphisms(Interlaced()).size(), 4u);
  EXPECT_EQ(testing::BruteForceIsomorphisms(Interlaced(), Interlaced()).size(), 4u);
  const std::vector<Isomorphism> autos = Automorphisms(TwoLoops());
  ASSERT_EQ(autos.size(), 2u);
  EXPECT_EQ(autos[0].rot[0], 0);
  EXPECT_EQ(autos[1].rot[0], 2);
  EXPECT_EQ(testing::BruteForceIsomorphisms(TwoLoops(), TwoLoops()).size(), 2u);
}

TEST(IsomorphismTest, FoundMapsSatisfyCompatibility) {
  std::mt19937_64 rng(7);
  for (const auto& [m, graphs] : MgnGraphs(1, 2).by_edge_count) {
    for (const Fatgraph& g : graphs) {
      const Fatgraph h = testing::Reencode(g, rng);
      const std::vector<Isomorphism> isos = Isomorphisms(g, h);
      ASSERT_FALSE(isos.empty());
      for (const Isomorphism& f : isos) EXPECT_TRUE(IsValidIsomorphism(f, g, h));
      EXPECT_EQ(isos.size(), Isomorphisms(h, g).size());
      EXPECT_EQ(isos.size(), Automorphisms(g).size());
    }
  }
}

TEST(OrientationTest, CompareOrientations) {
  EXPECT_EQ(CompareOrientations(IdentityIsomorphism(Theta03()), Theta03(), Theta03()), 1);
  const Isomorphism shift = Rotation(Automorphisms(Interlaced()), 1);
  EXPECT_EQ(shift.pe, (std::vector<EdgeLabel>{1, 0}));
  EXPECT_EQ(CompareOrientations(shift, Interlaced(), Interlaced()), -1);
  EXPECT_TRUE(IsOrientationReversing(Interlaced(), shift));
  for (const Isomorphism& a : Automorphisms(Theta11())) {
    EXPECT_EQ(CompareOrientations(a, Theta11(), Theta11()), 1);
  }
}

TEST(OrientationTest, Orientability) {
  EXPECT_FALSE(IsOrientable(Interlaced()));
  EXPECT_TRUE(IsOrientable(Theta11()));
  int trivial = 0;
  for (const auto& [m, graphs] : MgnGraphs(0, 5).by_edge_count) {
    for (const Fatgraph& g : graphs) {
      if (Automorphisms(g).size() == 1) {
        EXPECT_TRUE(IsOrientable(g));
        ++trivial;
      }
    }
  }
  EXPECT_GT(trivial, 0);
}

TEST(OrientationTest, SignIsMultiplicative) {
  std::mt19937_64 rng(11);
  for (const auto& [m, graphs] : MgnGraphs(0, 4).by_edge_count) {
    for (const Fatgraph& g : graphs) {
      const Fatgraph h = testing::Reencode(g, rng);
      const Fatgraph k = testing::Reencode(g, rng);
      const Isomorphism f = *FirstIsomorphism(g, h);
      for (const Isomorphism& u : Isomorphisms(h, k)) {
        EXPECT_EQ(CompareOrientations(Compose(f, u, g), g, k),
                  CompareOrientations(f, g, h) * CompareOrientations(u, h, k));
      }
    }
  }
}

TEST(TransformBoundaryCycleTest, Examples) {
  const Fatgraph theta = Theta03();
  for (const BoundaryCycle& b : theta.boundary_cycles()) {
    EXPECT_EQ(TransformBoundaryCycle(IdentityIsomorphism(theta), theta, b), b);
  }
  const Fatgraph interlaced = Interlaced();
  const BoundaryCycle only = interlaced.boundary_cycles()[0];
  EXPECT_EQ(TransformBoundaryCycle(Rotation(Automorphisms(interlaced), 1), interlaced, only),
            only);

  const Fatgraph loops = TwoLoops();
  const Isomorphism swap = Rotation(Automorphisms(loops), 2);
  int fixed = 0, moved = 0;
  for (const BoundaryCycle& b : loops.boundary_cycles()) {
    const BoundaryCycle image = TransformBoundaryCycle(swap, loops, b);
    ASSERT_GE(loops.BoundaryCycleIndex(image), 0);
    if (image == b) {
      ++fixed;
      EXPECT_EQ(b.size(), 2);  // the outer cycle runs along both loops
    } else {
      ++moved;
      EXPECT_EQ(b.size(), 1);
    }
  }
  EXPECT_EQ(fixed, 1);
  EXPECT_EQ(moved, 2);
}

TEST(OrbitTest, EdgeOrbits) {
  EXPECT_EQ(EdgeOrbits(Theta11()), (std::vector<EdgeLabel>{0}));
  EXPECT_EQ(EdgeOrbits(TwoLoops()), (std::vector<EdgeLabel>{0}));
  const Fatgraph dumbbell = Fatgraph::FromLists({{0, 0, 1}, {1, 2, 2}});
  EXPECT_EQ(EdgeOrbits(dumbbell), (std::vector<EdgeLabel>{0, 1}));
}

TEST(OrbitTest, TrivialGroupGivesEveryPair) {
  for (const auto& [m, graphs] : MgnGraphs(0, 5).by_edge_count) {
    for (const Fatgraph& g : graphs) {
      const std::vector<Isomorphism> autos = Automorphisms(g);
      const std::size_t all = 4u * g.num_edges() * g.num_edges();
      const std::size_t reps = OrientedEdgePairOrbits(g, autos).size();
      EXPECT_LE(reps, all);
      if (autos.size() == 1) {
        EXPECT_EQ(reps, all);
        EXPECT_EQ(EdgeOrbits(g, autos).size(), static_cast<std::size_t>(g.num_edges()));
      }
    }
  }
}

TEST(OrbitTest, SwappedLoopsShareAPairOrbit) {
  const Fatgraph loops = TwoLoops();
  const std::vector<Isomorphism> autos = Automorphisms(loops);
  const Isomorphism swap = Rotation(autos, 2);
  const OrientedEdge x0 = TransformOrientedEdge(swap, loops, loops, {0, 1});
  const OrientedEdge x1 = TransformOrientedEdge(swap, loops, loops, {1, 1});
  EXPECT_EQ(x0.edge, 1);
  EXPECT_EQ(x1.edge, 0);
  // Orbits on ordered pairs are swapped-pair closed: 16 pairs, group of order 2
  // with no fixed pair, so 8 orbits.
  EXPECT_EQ(OrientedEdgePairOrbits(loops, autos).size(), 8u);
  EXPECT_EQ(OrientedEdgeOrbits(loops, autos).size(), 2u);
}

TEST(IsoFromEdgeMapTest, IdentityAndThreeCycle) {
  const Fatgraph theta = Theta03();
  EXPECT_EQ(IsoFromEdgeMap(theta, theta, {0, 1, 2}), IdentityIsomorphism(theta));
  const Isomorphism f = IsoFromEdgeMap(theta, theta, {1, 2, 0});
  EXPECT_TRUE(IsValidIsomorphism(f, theta, theta));
  EXPECT_EQ(f.pe, (std::vector<EdgeLabel>{1, 2, 0}));
}

TEST(IsoFromEdgeMapTest, TwoVertexGraphWithVertexSwap) {
  // The hyperelliptic involution swaps the vertices and fixes every edge; the
  // lowest seed wins.
  const Fatgraph theta = Theta11();
  const Isomorphism f = IsoFromEdgeMap(theta, theta, {0, 1, 2});
  EXPECT_EQ(f, IdentityIsomorphism(theta));
}

TEST(IsoFromEdgeMapTest, RejectsMapsBreakingIncidence) {
  const Fatgraph dumbbell = Fatgraph::FromLists({{0, 0, 1}, {1, 2, 2}});
  try {
    IsoFromEdgeMap(dumbbell, dumbbell, {1, 0, 2});
    FAIL() << "expected an error";
  } catch (const FatgraphError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotIncidencePreserving);
  }
  EXPECT_THROW(IsoFromEdgeMap(dumbbell, dumbbell, {0, 0, 2}), FatgraphError);
}

}  // namespace
}  // namespace fatghom
