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

// Conversion between fatgraphs and their permutation-triple description.

#ifndef FATGHOM_COMBINATORIAL_H_
#define FATGHOM_COMBINATORIAL_H_

#include <vector>

#include "fatghom/fatgraph.h"

namespace fatghom {

// Half-edges are 0..2m-1. sigma0 rotates half-edges around their vertex,
// sigma1 swaps the two halves of an edge, sigma2 = sigma0^-1 o sigma1 walks
// boundary cycles (backwards). sigma0 o sigma2 == sigma1.
struct CombinatorialForm {
  std::vector<int> sigma0;
  std::vector<int> sigma1;
  std::vector<int> sigma2;
};

// Fills in sigma2 from sigma0 and sigma1. No validation.
CombinatorialForm MakeCombinatorialForm(std::vector<int> sigma0,
                                        std::vector<int> sigma1);

// Half-edge ids follow Fatgraph::HalfEdgeId.
CombinatorialForm ToCombinatorial(const Fatgraph& g);

// Vertices are sigma0-orbits ordered by least member, each starting at that
// member; labels number the sigma1-orbits by least member. Throws
// kInvalidPermutations, kLowValence or kDisconnected.
Fatgraph FromCombinatorial(const CombinatorialForm& c);

// Number of cycles of a permutation given as an image vector.
int CountCycles(const std::vector<int>& perm);

}  // namespace fatghom

#endif  // FATGHOM_COMBINATORIAL_H_
