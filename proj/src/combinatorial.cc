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

#include "fatghom/combinatorial.h"

#include <string>

namespace fatghom {

namespace {

bool IsBijection(const std::vector<int>& p) {
  std::vector<bool> seen(p.size(), false);
  for (int x : p) {
    if (x < 0 || x >= static_cast<int>(p.size()) || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

}  // namespace

CombinatorialForm MakeCombinatorialForm(std::vector<int> sigma0,
                                        std::vector<int> sigma1) {
  const std::size_t n = sigma0.size();
  std::vector<int> inv0(n);
  for (std::size_t h = 0; h < n; ++h) inv0[sigma0[h]] = static_cast<int>(h);
  std::vector<int> sigma2(n);
  for (std::size_t h = 0; h < n; ++h) sigma2[h] = inv0[sigma1[h]];
  return {std::move(sigma0), std::move(sigma1), std::move(sigma2)};
}

CombinatorialForm ToCombinatorial(const Fatgraph& g) {
  const int size = g.num_half_edges();
  std::vector<int> sigma0(size), sigma1(size);
  for (int v = 0; v < g.num_vertices(); ++v) {
    const int z = g.vertex(v).valence();
    for (int a = 0; a < z; ++a) {
      sigma0[g.HalfEdgeId({v, a})] = g.HalfEdgeId({v, (a + 1) % z});
    }
  }
  for (const Edge& e : g.edges()) {
    const int h0 = g.HalfEdgeId(e.ends[0]);
    const int h1 = g.HalfEdgeId(e.ends[1]);
    sigma1[h0] = h1;
    sigma1[h1] = h0;
  }
  return MakeCombinatorialForm(std::move(sigma0), std::move(sigma1));
}

Fatgraph FromCombinatorial(const CombinatorialForm& c) {
  const int size = static_cast<int>(c.sigma0.size());
  if (static_cast<int>(c.sigma1.size()) != size ||
      static_cast<int>(c.sigma2.size()) != size || !IsBijection(c.sigma0) ||
      !IsBijection(c.sigma1) || !IsBijection(c.sigma2)) {
    throw FatgraphError(ErrorCode::kInvalidPermutations,
                        "sigma0, sigma1, sigma2 must be bijections of one set");
  }
  for (int h = 0; h < size; ++h) {
    if (c.sigma1[h] == h || c.sigma1[c.sigma1[h]] != h) {
      throw FatgraphError(ErrorCode::kInvalidPermutations,
                          "sigma1 is not a fixed-point free involution");
    }
    if (c.sigma0[c.sigma2[h]] != c.sigma1[h]) {
      throw FatgraphError(ErrorCode::kInvalidPermutations,
                          "sigma0 o sigma2 != sigma1");
    }
  }
  if (size == 0) throw FatgraphError(ErrorCode::kEmptyGraph, "no half-edges");

  std::vector<int> label(size, -1);
  int next_label = 0;
  for (int h = 0; h < size; ++h) {
    if (label[h] < 0) label[h] = label[c.sigma1[h]] = next_label++;
  }
  std::vector<bool> placed(size, false);
  std::vector<Vertex> vertices;
  for (int h = 0; h < size; ++h) {
    if (placed[h]) continue;
    std::vector<EdgeLabel> labels;
    for (int x = h; !placed[x]; x = c.sigma0[x]) {
      placed[x] = true;
      labels.push_back(label[x]);
    }
    if (labels.size() < 3) {
      throw FatgraphError(ErrorCode::kLowValence,
                          "sigma0 orbit of length " + std::to_string(labels.size()));
    }
    vertices.emplace_back(std::move(labels));
  }
  return Fatgraph::Build(std::move(vertices));
}

int CountCycles(const std::vector<int>& perm) {
  std::vector<bool> seen(perm.size(), false);
  int cycles = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (std::size_t j = i; !seen[j]; j = perm[j]) seen[j] = true;
  }
  return cycles;
}

}  // namespace fatghom
