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

#include "fatghom/marked_pool.h"

#include <algorithm>
#include <string>

namespace fatghom {

Permutation Phi(const Isomorphism& a, const Fatgraph& g) {
  const int n = g.num_boundary_cycles();
  std::vector<int> images(n);
  for (int i = 0; i < n; ++i) {
    images[i] = g.BoundaryCycleIndex(TransformBoundaryCycle(a, g, g.boundary_cycles()[i]));
    if (images[i] < 0) {
      throw FatgraphError(ErrorCode::kCycleNotFound,
                          "automorphism image of cycle " + std::to_string(i) +
                              " is not a boundary cycle");
    }
  }
  return Permutation(std::move(images));
}

MarkedFatgraphPool MakeMarkedFatgraphPool(Fatgraph g) {
  MarkedFatgraphPool pool{std::move(g), {}, {}, {}, {}, true, 0, {}};
  const Fatgraph& graph = pool.graph;
  const std::vector<Isomorphism> autos = Automorphisms(graph);
  pool.num_automorphisms = static_cast<int>(autos.size());
  for (const Isomorphism& a : autos) {
    Permutation pi = Phi(a, graph);
    const int sign = CompareOrientations(a, graph, graph);
    if (pi.IsIdentity() && sign < 0) pool.orientable = false;
    if (std::find(pool.P.begin(), pool.P.end(), pi) == pool.P.end()) {
      pool.P.push_back(std::move(pi));
      pool.A.push_back(a);
      pool.aut_sign.push_back(sign);
    }
  }

  const int n = graph.num_boundary_cycles();
  const std::int64_t total = Factorial(n);
  pool.coset_of.assign(total, {-1, -1});
  for (std::int64_t rank = 0; rank < total; ++rank) {
    if (pool.coset_of[rank].first >= 0) continue;
    const Permutation sigma = Permutation::FromRank(n, rank);
    const int j = pool.num_markings();
    for (int i = 0; i < static_cast<int>(pool.P.size()); ++i) {
      pool.coset_of[(sigma * pool.P[i]).Rank()] = {j, i};
    }
    pool.markings.push_back(sigma);
  }
  return pool;
}

CosetHit IndexAndAut(const MarkedFatgraphPool& pool, const Permutation& sigma) {
  const auto [j, i] = pool.coset_of[sigma.Rank()];
  return {j, i, pool.aut_sign[i]};
}

std::vector<BlockEntry> ComputeBlock(const MarkedFatgraphPool& p1, EdgeLabel e,
                                     const MarkedFatgraphPool& p2) {
  const Fatgraph contracted = Contract(p1.graph, e);
  std::optional<Isomorphism> f2 = FirstIsomorphism(contracted, p2.graph);
  if (!f2.has_value()) return {};
  return ComputeBlock(p1, e, contracted, *f2, p2);
}

std::vector<BlockEntry> ComputeBlock(const MarkedFatgraphPool& p1, EdgeLabel e,
                                     const Fatgraph& contracted,
                                     const Isomorphism& f2,
                                     const MarkedFatgraphPool& p2) {
  const Fatgraph& g1 = p1.graph;
  const int n = g1.num_boundary_cycles();
  // psi[i]: index in p2.graph of the image of cycle i of g1.
  std::vector<int> psi_inv(n);
  for (int i = 0; i < n; ++i) {
    const int mid = contracted.BoundaryCycleIndex(
        ContractBoundaryCycle(g1, g1.boundary_cycles()[i], e));
    if (mid < 0) {
      throw FatgraphError(ErrorCode::kCycleNotFound, "contracted cycle not found");
    }
    const int last = p2.graph.BoundaryCycleIndex(
        TransformBoundaryCycle(f2, contracted, contracted.boundary_cycles()[mid]));
    if (last < 0) {
      throw FatgraphError(ErrorCode::kCycleNotFound, "transported cycle not found");
    }
    psi_inv[last] = i;
  }
  const int base = (g1.orientation()[e] % 2 == 0 ? 1 : -1) *
                   CompareOrientations(f2, contracted, p2.graph);
  std::vector<BlockEntry> out;
  out.reserve(p1.markings.size());
  std::vector<int> images(n);
  for (int j = 0; j < p1.num_markings(); ++j) {
    const Permutation& sigma1 = p1.markings[j];
    for (int k = 0; k < n; ++k) images[k] = sigma1[psi_inv[k]];
    const CosetHit hit = IndexAndAut(p2, Permutation(images));
    out.push_back({j, hit.index, base * hit.sign});
  }
  return out;
}

}  // namespace fatghom
