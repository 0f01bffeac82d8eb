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
#include <set>

#include "fatghom/generation.h"
#include "gtest/gtest.h"

namespace fatghom {
namespace {

const Fatgraph Theta03() { return Fatgraph::FromLists({{0, 1, 2}, {2, 1, 0}}); }
const Fatgraph Theta11() { return Fatgraph::FromLists({{0, 1, 2}, {0, 1, 2}}); }

std::set<Corner> CornerSet(const BoundaryCycle& b) {
  return {b.corners().begin(), b.corners().end()};
}

TEST(VertexTest, EqualityIsUpToRotation) {
  EXPECT_EQ(Vertex({0, 1, 2}), Vertex({1, 2, 0}));
  EXPECT_EQ(Vertex({0, 1, 2}), Vertex({2, 0, 1}));
  EXPECT_FALSE(Vertex({0, 1, 2}) == Vertex({0, 2, 1}));
  EXPECT_FALSE(Vertex({0, 1, 2}) == Vertex({0, 1, 2, 3}));
}

TEST(VertexTest, CanonicalShiftPicksEarliestLeastRotation) {
  EXPECT_EQ(Vertex({2, 0, 1}).CanonicalShift(), 1);
  // Periodic words: rotations 0 and 2 give the same word; 0 wins.
  EXPECT_EQ(Vertex({0, 1, 0, 1}).CanonicalShift(), 0);
  EXPECT_EQ(Vertex({1, 0, 1, 0}).CanonicalShift(), 1);
}

TEST(VertexTest, RotatedAndLoops) {
  const Vertex v{3, 4, 5, 3};
  EXPECT_EQ(v.Rotated(1).labels(), (std::vector<EdgeLabel>{4, 5, 3, 3}));
  EXPECT_EQ(v.Cyclic(-1), 3);
  EXPECT_EQ(v.num_loops(), 1);
  EXPECT_EQ(Vertex({0, 0, 1, 1}).num_loops(), 2);
}

TEST(FatgraphTest, ThetaWithThreeBoundaryCycles) {
  const Fatgraph g = Theta03();
  EXPECT_EQ(g.num_vertices(), 2);
  EXPECT_EQ(g.num_edges(), 3);
  EXPECT_EQ(g.num_boundary_cycles(), 3);
  EXPECT_EQ(g.genus(), 0);
}

TEST(FatgraphTest, ThetaWithOneBoundaryCycle) {
  const Fatgraph g = Theta11();
  EXPECT_EQ(g.num_vertices(), 2);
  EXPECT_EQ(g.num_edges(), 3);
  EXPECT_EQ(g.num_boundary_cycles(), 1);
  EXPECT_EQ(g.genus(), 1);
}

TEST(FatgraphTest, OneVertexThreeEdgesHasTwoCycles) {
  const Fatgraph g = Fatgraph::FromLists({{0, 1, 2, 0, 1, 2}});
  ASSERT_EQ(g.num_boundary_cycles(), 2);
  const std::set<std::set<Corner>> expected = {
      {{0, 2, 3}, {0, 4, 5}, {0, 0, 1}},
      {{0, 1, 2}, {0, 3, 4}, {0, 5, 0}},
  };
  std::set<std::set<Corner>> actual;
  for (const BoundaryCycle& b : g.boundary_cycles()) actual.insert(CornerSet(b));
  EXPECT_EQ(actual, expected);
  EXPECT_EQ(g.genus(), 1);
}

TEST(FatgraphTest, EdgeList) {
  const std::vector<Edge> edges = Theta03().edges();
  EXPECT_EQ(edges[0].ends[0], (Endpoint{0, 0}));
  EXPECT_EQ(edges[0].ends[1], (Endpoint{1, 2}));
  const Fatgraph loops = Fatgraph::FromLists({{0, 0, 1, 1}});
  EXPECT_TRUE(loops.is_loop(0));
  EXPECT_EQ(loops.edge(0).ends[0], (Endpoint{0, 0}));
  EXPECT_EQ(loops.edge(0).ends[1], (Endpoint{0, 1}));
  EXPECT_EQ(loops.num_boundary_cycles(), 3);
}

TEST(FatgraphTest, DefaultOrientationIsListingOrder) {
  EXPECT_EQ(Theta03().orientation(), Orientation::Identity(3));
}

TEST(FatgraphTest, BuildErrors) {
  auto code_of = [](const std::vector<std::vector<EdgeLabel>>& lists) {
    try {
      Fatgraph::FromLists(lists);
    } catch (const FatgraphError& e) {
      return e.code();
    }
    return ErrorCode::kIo;  // no error
  };
  EXPECT_EQ(code_of({}), ErrorCode::kEmptyGraph);
  EXPECT_EQ(code_of({{0, 1, 2}, {0, 1, 1}}), ErrorCode::kMalformedLabels);
  EXPECT_EQ(code_of({{0, 1, 2}, {0, 1, 3}}), ErrorCode::kMalformedLabels);
  EXPECT_EQ(code_of({{0, 1, 2}, {0, 1}}), ErrorCode::kMalformedLabels);
  EXPECT_EQ(code_of({{0, 0, 1, 1}, {2, 2, 3, 3}}), ErrorCode::kDisconnected);
  EXPECT_EQ(code_of({{0, 1}, {0, 1}}), ErrorCode::kLowValence);
  EXPECT_THROW(Fatgraph::FromLists({{0, 1, 2}, {2, 1, 0}}, Orientation::Identity(2)),
               FatgraphError);
  EXPECT_THROW(Orientation({0, 0, 1}), FatgraphError);
}

TEST(FatgraphTest, BoundaryCycleIndexRejectsForeignCycles) {
  const Fatgraph g = Theta03();
  for (int i = 0; i < g.num_boundary_cycles(); ++i) {
    EXPECT_EQ(g.BoundaryCycleIndex(g.boundary_cycles()[i]), i);
  }
  EXPECT_EQ(g.BoundaryCycleIndex(BoundaryCycle({{0, 0, 1}})), -1);
  EXPECT_EQ(g.BoundaryCycleIndex(BoundaryCycle({{5, 0, 1}})), -1);
}

TEST(ContractTest, ThetaToSingleVertex) {
  const Fatgraph c = Contract(Theta03(), 0);
  ASSERT_EQ(c.num_vertices(), 1);
  // Labels 1, 2 shift down to 0, 1.
  EXPECT_EQ(c.vertex(0), Vertex({0, 1, 1, 0}));
  EXPECT_EQ(c.num_boundary_cycles(), 3);
  EXPECT_EQ(c.genus(), 0);
}

TEST(ContractTest, LoopIsRejected) {
  const Fatgraph dumbbell = Fatgraph::FromLists({{0, 0, 1}, {1, 2, 2}});
  try {
    Contract(dumbbell, 0);
    FAIL() << "expected an error";
  } catch (const FatgraphError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kLoopContraction);
  }
  EXPECT_THROW(ContractBoundaryCycle(dumbbell, dumbbell.boundary_cycles()[0], 2),
               FatgraphError);
}

TEST(ContractTest, OrientationPositionsAboveTheEdgeShiftDown) {
  const Fatgraph g = Fatgraph::FromLists({{0, 1, 2}, {2, 1, 0}}, Orientation({2, 0, 1}));
  // Edge 1 sits at position 0; edges 0 and 2 drop from 2, 1 to 1, 0.
  const Fatgraph c = Contract(g, 1);
  EXPECT_EQ(c.orientation().positions(), (std::vector<int>{1, 0}));
  // Edge 0 sits at position 2; nothing above it.
  EXPECT_EQ(Contract(g, 0).orientation().positions(), (std::vector<int>{0, 1}));
}

TEST(ContractTest, CornersAroundTheEdgeFuse) {
  const Fatgraph g = Theta03();
  int total = 0;
  for (const BoundaryCycle& b : g.boundary_cycles()) {
    total += ContractBoundaryCycle(g, b, 0).size();
  }
  EXPECT_EQ(total, 2 * g.num_edges() - 2);
}

TEST(ContractTest, ContractedCyclesAreTheCyclesOfTheContraction) {
  for (auto [genus, n] : {std::pair{0, 4}, {1, 2}, {2, 1}, {0, 5}}) {
    const GraphFamily family = MgnGraphs(genus, n);
    for (const auto& [m, graphs] : family.by_edge_count) {
      for (const Fatgraph& g : graphs) {
        for (EdgeLabel e = 0; e < g.num_edges(); ++e) {
          if (g.is_loop(e)) continue;
          const Fatgraph c = Contract(g, e);
          std::set<std::set<Corner>> expected, actual;
          for (const BoundaryCycle& b : c.boundary_cycles()) expected.insert(CornerSet(b));
          for (const BoundaryCycle& b : g.boundary_cycles()) {
            actual.insert(CornerSet(ContractBoundaryCycle(g, b, e)));
          }
          ASSERT_EQ(actual, expected) << g << " edge " << e;
        }
      }
    }
  }
}

TEST(FatgraphInvariantsTest, EulerRelationAndCyclePartition) {
  for (auto [genus, n] : {std::pair{0, 3}, {1, 1}, {0, 4}, {1, 2}, {2, 1}, {0, 5}, {1, 3}}) {
    const GraphFamily family = MgnGraphs(genus, n);
    for (const auto& [m, graphs] : family.by_edge_count) {
      for (const Fatgraph& g : graphs) {
        EXPECT_EQ(g.num_vertices() - g.num_edges() + g.num_boundary_cycles(),
                  2 - 2 * g.genus());
        EXPECT_GE(g.genus(), 0);
        EXPECT_GE(m, MinEdges(genus, n));
        EXPECT_LE(m, MaxEdges(genus, n));
        std::set<Corner> seen;
        int total = 0;
        for (const BoundaryCycle& b : g.boundary_cycles()) {
          total += b.size();
          for (const Corner& c : b.corners()) {
            EXPECT_EQ(c.outgoing, (c.incoming + 1) % g.vertex(c.vertex).valence());
            EXPECT_TRUE(seen.insert(c).second);
          }
        }
        EXPECT_EQ(total, 2 * g.num_edges());
      }
    }
  }
}

}  // namespace
}  // namespace fatghom
