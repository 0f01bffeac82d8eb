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

// The graph complex of marked orientable fatgraphs and its homology.
//
// The chain group in edge count m has one basis vector per marking class of
// each orientable fatgraph with m edges. The differential D^(m) sums, with
// signs, the contractions of the non-loop edges. Homological degree k sits
// at m = m_max - k.

#ifndef FATGHOM_CHAIN_COMPLEX_H_
#define FATGHOM_CHAIN_COMPLEX_H_

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <vector>

#include "fatghom/generation.h"
#include "fatghom/marked_pool.h"
#include "fatghom/rank.h"
#include "fatghom/sparse_matrix.h"

namespace fatghom {

// Pools of one edge-count bucket with coordinate offsets; offset -1 marks a
// non-orientable pool, which has no coordinates.
struct PoolBucket {
  std::vector<MarkedFatgraphPool> pools;
  std::vector<std::int64_t> offsets;
  std::int64_t dimension = 0;
};

struct ChainComplex {
  int g = 0;
  int n = 0;
  int m_min = 0;
  int m_max = 0;
  std::map<int, PoolBucket> buckets;
  // matrices[m] is D^(m) from the m-edge space to the (m-1)-edge space, for
  // m_min < m <= m_max.
  std::map<int, SparseIntegerMatrix> matrices;

  std::int64_t dimension(int m) const;
};

// Builds pools for every graph of a bucket. Pools are independent, so the
// parallel variant distributes them over threads.
PoolBucket MakePoolBucket(const std::vector<Fatgraph>& graphs, bool parallel = true);

// D^(m) assembled block by block. The serial and parallel variants produce
// identical matrices.
SparseIntegerMatrix BoundaryOperator(const PoolBucket& upper,
                                     const PoolBucket& lower, bool parallel = true);

ChainComplex BuildChainComplex(const GraphFamily& family, bool parallel = true);
// Throws kInvalidSignature for unstable (g, n).
ChainComplex BuildChainComplex(int g, int n, bool parallel = true);

// True iff D^(m-1) D^(m) == 0 for every consecutive pair.
bool VerifyChainProperty(const ChainComplex& complex);

// rank of D^(m), keyed by m.
std::map<int, RankResult> ComputeRanks(const ChainComplex& complex,
                                       const RankOptions& options = {});

// b_k = dim W^(m) - rank D^(m) - rank D^(m+1) with m = m_max - k. Missing
// ranks count as zero.
std::vector<std::int64_t> BettiNumbers(const ChainComplex& complex,
                                       const std::map<int, std::int64_t>& ranks);

struct EulerCharacteristics {
  std::int64_t classical = 0;          // alternating sum of Betti numbers
  std::int64_t alternating_dims = 0;   // sum_m (-1)^(m_max - m) dim W^(m)
  mpq_class virtual_signed;            // sum over graphs (-1)^m n! / |Aut G|
  mpq_class virtual_magnitude;
};

EulerCharacteristics ComputeEulerCharacteristics(
    const ChainComplex& complex, const std::vector<std::int64_t>& betti);

}  // namespace fatghom

#endif  // FATGHOM_CHAIN_COMPLEX_H_
