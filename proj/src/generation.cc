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

#include "fatghom/generation.h"

#include <functional>
#include <mutex>
#include <string>
#include <utility>

#include "fatghom/combinatorial.h"
#include "fatghom/isomorphism.h"
#include "union_find.h"

namespace fatghom {

namespace {

using Lists = std::vector<std::vector<EdgeLabel>>;

// Gives the ends[1] half of `e` the label `label`.
void SplitEdge(const Fatgraph& g, EdgeLabel e, EdgeLabel label, Lists& lists) {
  const Endpoint head = g.edge(e).ends[1];
  lists[head.vertex][head.attachment] = label;
}

std::vector<EdgeLabel> Midpoint(EdgeLabel toward_tail, EdgeLabel toward_head,
                                EdgeLabel third, int side) {
  if (side > 0) return {toward_tail, toward_head, third};
  return {toward_head, toward_tail, third};
}

// Sources for the recursive step, each tagged with whether slip knots apply.
struct Source {
  const Fatgraph* graph;
  bool slipknots;
};

std::vector<Fatgraph> Candidates(const Fatgraph& g, bool slipknots) {
  const std::vector<Isomorphism> autos = Automorphisms(g);
  std::vector<Fatgraph> out;
  if (slipknots) {
    for (OrientedEdge x : OrientedEdgeOrbits(g, autos)) {
      out.push_back(AttachSlipknot(g, x));
    }
  }
  for (const auto& [x, y] : OrientedEdgePairOrbits(g, autos)) {
    out.push_back(BridgeEdges(g, x, y));
  }
  return out;
}

std::vector<Fatgraph> GenerateTrivalent(int g, int n) {
  if (g == 0 && n == 3) {
    return {Fatgraph::FromLists({{0, 1, 2}, {2, 1, 0}}),
            Fatgraph::FromLists({{0, 0, 1}, {1, 2, 2}})};
  }
  if (g == 1 && n == 1) return {Fatgraph::FromLists({{0, 1, 2}, {0, 1, 2}})};

  const std::vector<Fatgraph> same_genus = MgnTrivalentGraphs(g, n - 1);
  const std::vector<Fatgraph> lower_genus =
      g > 0 ? MgnTrivalentGraphs(g - 1, n + 1) : std::vector<Fatgraph>{};
  std::vector<Source> sources;
  for (const Fatgraph& s : same_genus) sources.push_back({&s, true});
  for (const Fatgraph& s : lower_genus) sources.push_back({&s, false});

  std::vector<std::vector<Fatgraph>> produced(sources.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < sources.size(); ++i) {
    std::vector<Fatgraph> kept;
    for (Fatgraph& c : Candidates(*sources[i].graph, sources[i].slipknots)) {
      if (c.genus() == g && c.num_boundary_cycles() == n) kept.push_back(std::move(c));
    }
    produced[i] = std::move(kept);
  }
  IsomorphismClassifier classes;
  for (auto& batch : produced) {
    for (Fatgraph& c : batch) classes.Insert(std::move(c));
  }
  return std::move(classes).TakeGraphs();
}

// Calls `visit` on every fixed-point free involution of [0, size).
void ForEachInvolution(int size, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> sigma(size, -1);
  std::function<void()> recurse = [&]() {
    int a = 0;
    while (a < size && sigma[a] >= 0) ++a;
    if (a == size) {
      visit(sigma);
      return;
    }
    for (int b = a + 1; b < size; ++b) {
      if (sigma[b] >= 0) continue;
      sigma[a] = b;
      sigma[b] = a;
      recurse();
      sigma[a] = sigma[b] = -1;
    }
  };
  recurse();
}

// Calls `visit` on every product of disjoint 3-cycles covering [0, size).
void ForEachTripleProduct(int size,
                          const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> sigma(size, -1);
  std::function<void()> recurse = [&]() {
    int a = 0;
    while (a < size && sigma[a] >= 0) ++a;
    if (a == size) {
      visit(sigma);
      return;
    }
    for (int b = a + 1; b < size; ++b) {
      if (sigma[b] >= 0) continue;
      for (int c = a + 1; c < size; ++c) {
        if (c == b || sigma[c] >= 0) continue;
        // (a b c) and (a c b) both arise as (b, c) ranges over ordered pairs.
        sigma[a] = b;
        sigma[b] = c;
        sigma[c] = a;
        recurse();
        sigma[a] = sigma[b] = sigma[c] = -1;
      }
    }
  };
  recurse();
}

bool IsTransitive(const std::vector<int>& sigma0, const std::vector<int>& sigma1) {
  const int size = static_cast<int>(sigma0.size());
  internal::UnionFind sets(size);
  int components = size;
  for (int h = 0; h < size; ++h) {
    if (sets.Union(h, sigma0[h])) --components;
    if (sets.Union(h, sigma1[h])) --components;
  }
  return components == 1;
}

}  // namespace

Fatgraph AttachSlipknot(const Fatgraph& g, OrientedEdge x) {
  const EdgeLabel m = g.num_edges();
  Lists lists = g.ToLists();
  SplitEdge(g, x.edge, m, lists);
  lists.push_back(Midpoint(x.edge, m, m + 1, x.side));
  lists.push_back({m + 1, m + 2, m + 2});
  return Fatgraph::FromLists(lists);
}

Fatgraph BridgeEdges(const Fatgraph& g, OrientedEdge x, OrientedEdge y) {
  const EdgeLabel m = g.num_edges();
  const EdgeLabel bridge = m + 2;
  Lists lists = g.ToLists();
  if (x.edge != y.edge) {
    SplitEdge(g, x.edge, m, lists);
    SplitEdge(g, y.edge, m + 1, lists);
    lists.push_back(Midpoint(x.edge, m, bridge, x.side));
    lists.push_back(Midpoint(y.edge, m + 1, bridge, y.side));
    return Fatgraph::FromLists(lists);
  }
  // Both midpoints on one edge. The head half becomes m and the middle
  // segment m + 1; for x.side == +1 the order from the tail is x, B, A, for
  // x.side == -1 it is x, A, B.
  const EdgeLabel e = x.edge;
  SplitEdge(g, e, m, lists);
  if (x.side > 0) {
    lists.push_back({m + 1, m, bridge});
    lists.push_back(Midpoint(e, m + 1, bridge, y.side));
  } else {
    lists.push_back({m + 1, e, bridge});
    lists.push_back(Midpoint(m + 1, m, bridge, y.side));
  }
  return Fatgraph::FromLists(lists);
}

std::optional<int> IsomorphismClassifier::Find(const Fatgraph& g) const {
  auto it = buckets_.find(g.signature());
  if (it == buckets_.end()) return std::nullopt;
  for (int i : it->second) {
    if (AreIsomorphic(g, graphs_[i])) return i;
  }
  return std::nullopt;
}

int IsomorphismClassifier::Insert(Fatgraph g) {
  if (std::optional<int> i = Find(g)) return *i;
  const int index = static_cast<int>(graphs_.size());
  buckets_[g.signature()].push_back(index);
  graphs_.push_back(std::move(g));
  return index;
}

std::vector<Fatgraph> DedupIsomorphs(const std::vector<Fatgraph>& graphs) {
  IsomorphismClassifier classes;
  for (const Fatgraph& g : graphs) classes.Insert(g);
  return std::move(classes).TakeGraphs();
}

std::vector<Fatgraph> MgnTrivalentGraphs(int g, int n) {
  if (g < 0 || n <= 0 || (g == 0 && n < 3)) return {};
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::vector<Fatgraph>> cache;
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find({g, n});
    if (it != cache.end()) return it->second;
  }
  std::vector<Fatgraph> graphs = GenerateTrivalent(g, n);
  std::lock_guard<std::mutex> lock(mutex);
  return cache.try_emplace({g, n}, std::move(graphs)).first->second;
}

int GraphFamily::total() const {
  int sum = 0;
  for (const auto& [m, graphs] : by_edge_count) sum += static_cast<int>(graphs.size());
  return sum;
}

GraphFamily MgnGraphs(int g, int n) {
  if (!IsStableSignature(g, n)) {
    throw FatgraphError(ErrorCode::kInvalidSignature,
                        "(g, n) = (" + std::to_string(g) + ", " + std::to_string(n) +
                            ") needs n > 0 and 2 - 2g - n < 0");
  }
  GraphFamily family{g, n, {}};
  const int m_max = MaxEdges(g, n);
  const int m_min = MinEdges(g, n);
  family.by_edge_count[m_max] = MgnTrivalentGraphs(g, n);
  for (int m = m_max; m > m_min; --m) {
    const std::vector<Fatgraph>& upper = family.by_edge_count[m];
    std::vector<std::vector<Fatgraph>> produced(upper.size());
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < upper.size(); ++i) {
      for (EdgeLabel e : EdgeOrbits(upper[i])) {
        if (!upper[i].is_loop(e)) produced[i].push_back(Contract(upper[i], e));
      }
    }
    IsomorphismClassifier classes;
    for (auto& batch : produced) {
      for (Fatgraph& c : batch) classes.Insert(std::move(c));
    }
    family.by_edge_count[m - 1] = std::move(classes).TakeGraphs();
  }
  return family;
}

std::vector<Fatgraph> OracleGenerateFromPermutations(int g, int n, int m,
                                                     const OracleOptions& options) {
  const int size = 2 * m;
  if (size > options.max_half_edges) {
    throw FatgraphError(ErrorCode::kInfeasibleSize,
                        std::to_string(size) + " half-edges exceeds the guard of " +
                            std::to_string(options.max_half_edges));
  }
  if (m <= 0 || size % 3 != 0) {
    throw FatgraphError(ErrorCode::kInfeasibleSize,
                        "trivalent graphs need 2m divisible by 3");
  }
  const int l = size / 3;
  IsomorphismClassifier classes;
  auto try_pair = [&](const std::vector<int>& sigma0, const std::vector<int>& sigma1) {
    if (!IsTransitive(sigma0, sigma1)) return;
    CombinatorialForm form = MakeCombinatorialForm(sigma0, sigma1);
    const int boundary = CountCycles(form.sigma2);
    if (boundary != n || 2 - l + m - boundary != 2 * g) return;
    classes.Insert(FromCombinatorial(form));
  };
  if (options.all_sigma0) {
    ForEachTripleProduct(size, [&](const std::vector<int>& sigma0) {
      ForEachInvolution(size, [&](const std::vector<int>& sigma1) {
        try_pair(sigma0, sigma1);
      });
    });
  } else {
    std::vector<int> sigma0(size);
    for (int h = 0; h < size; ++h) sigma0[h] = (h % 3 == 2) ? h - 2 : h + 1;
    ForEachInvolution(size, [&](const std::vector<int>& sigma1) {
      try_pair(sigma0, sigma1);
    });
  }
  return std::move(classes).TakeGraphs();
}

}  // namespace fatghom
