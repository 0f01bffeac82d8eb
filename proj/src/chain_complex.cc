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

#include "fatghom/chain_complex.h"

#include <optional>
#include <unordered_map>

#include "fatghom/permutation.h"

namespace fatghom {

namespace {

using Triplets = std::vector<SparseIntegerMatrix::Entry>;

// Locates contraction targets inside the lower bucket.
class TargetIndex {
 public:
  explicit TargetIndex(const PoolBucket& lower) : lower_(lower) {
    for (int i = 0; i < static_cast<int>(lower.pools.size()); ++i) {
      buckets_[lower.pools[i].graph.signature()].push_back(i);
    }
  }

  // Target pool index and an isomorphism onto it, or -1.
  int Find(const Fatgraph& g, Isomorphism& f) const {
    auto it = buckets_.find(g.signature());
    if (it == buckets_.end()) return -1;
    for (int i : it->second) {
      if (std::optional<Isomorphism> iso = FirstIsomorphism(g, lower_.pools[i].graph)) {
        f = *std::move(iso);
        return i;
      }
    }
    return -1;
  }

 private:
  const PoolBucket& lower_;
  std::unordered_map<TopologicalSignature, std::vector<int>, SignatureHash> buckets_;
};

void AppendColumnBlock(const PoolBucket& upper, const PoolBucket& lower,
                       const TargetIndex& targets, int source, Triplets& out) {
  if (upper.offsets[source] < 0) return;
  const MarkedFatgraphPool& p1 = upper.pools[source];
  const std::int64_t col0 = upper.offsets[source];
  for (EdgeLabel e = 0; e < p1.graph.num_edges(); ++e) {
    if (p1.graph.is_loop(e)) continue;
    const Fatgraph contracted = Contract(p1.graph, e);
    Isomorphism f2;
    const int t = targets.Find(contracted, f2);
    if (t < 0 || lower.offsets[t] < 0) continue;
    const std::int64_t row0 = lower.offsets[t];
    for (const BlockEntry& b : ComputeBlock(p1, e, contracted, f2, lower.pools[t])) {
      out.push_back({static_cast<int>(row0 + b.target), static_cast<int>(col0 + b.source),
                     b.sign});
    }
  }
}

}  // namespace

std::int64_t ChainComplex::dimension(int m) const {
  auto it = buckets.find(m);
  return it == buckets.end() ? 0 : it->second.dimension;
}

PoolBucket MakePoolBucket(const std::vector<Fatgraph>& graphs, bool parallel) {
  PoolBucket bucket;
  std::vector<std::optional<MarkedFatgraphPool>> built(graphs.size());
  const std::int64_t count = static_cast<std::int64_t>(graphs.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (std::int64_t i = 0; i < count; ++i) {
    built[i] = MakeMarkedFatgraphPool(graphs[i]);
  }
  bucket.pools.reserve(graphs.size());
  for (auto& pool : built) bucket.pools.push_back(*std::move(pool));
  bucket.offsets.resize(graphs.size());
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    if (bucket.pools[i].orientable) {
      bucket.offsets[i] = bucket.dimension;
      bucket.dimension += bucket.pools[i].num_markings();
    } else {
      bucket.offsets[i] = -1;
    }
  }
  return bucket;
}

SparseIntegerMatrix BoundaryOperator(const PoolBucket& upper,
                                     const PoolBucket& lower, bool parallel) {
  const TargetIndex targets(lower);
  const int count = static_cast<int>(upper.pools.size());
  Triplets all;
  if (!parallel) {
    for (int i = 0; i < count; ++i) AppendColumnBlock(upper, lower, targets, i, all);
  } else {
    std::vector<Triplets> per_source(count);
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < count; ++i) {
      AppendColumnBlock(upper, lower, targets, i, per_source[i]);
    }
    for (Triplets& t : per_source) all.insert(all.end(), t.begin(), t.end());
  }
  return SparseIntegerMatrix::FromTriplets(static_cast<int>(lower.dimension),
                                           static_cast<int>(upper.dimension),
                                           std::move(all));
}

ChainComplex BuildChainComplex(const GraphFamily& family, bool parallel) {
  ChainComplex complex;
  complex.g = family.g;
  complex.n = family.n;
  complex.m_min = MinEdges(family.g, family.n);
  complex.m_max = MaxEdges(family.g, family.n);
  for (const auto& [m, graphs] : family.by_edge_count) {
    complex.buckets[m] = MakePoolBucket(graphs, parallel);
  }
  for (int m = complex.m_min + 1; m <= complex.m_max; ++m) {
    complex.matrices[m] =
        BoundaryOperator(complex.buckets[m], complex.buckets[m - 1], parallel);
  }
  return complex;
}

ChainComplex BuildChainComplex(int g, int n, bool parallel) {
  return BuildChainComplex(MgnGraphs(g, n), parallel);
}

bool VerifyChainProperty(const ChainComplex& complex) {
  for (int m = complex.m_min + 2; m <= complex.m_max; ++m) {
    if (!Multiply(complex.matrices.at(m - 1), complex.matrices.at(m)).IsZero()) {
      return false;
    }
  }
  return true;
}

std::map<int, RankResult> ComputeRanks(const ChainComplex& complex,
                                       const RankOptions& options) {
  std::map<int, RankResult> ranks;
  for (const auto& [m, matrix] : complex.matrices) ranks[m] = ComputeRank(matrix, options);
  return ranks;
}

std::vector<std::int64_t> BettiNumbers(const ChainComplex& complex,
                                       const std::map<int, std::int64_t>& ranks) {
  auto rank = [&](int m) -> std::int64_t {
    auto it = ranks.find(m);
    return it == ranks.end() ? 0 : it->second;
  };
  std::vector<std::int64_t> betti;
  for (int m = complex.m_max; m >= complex.m_min; --m) {
    const std::int64_t r_out = m > complex.m_min ? rank(m) : 0;
    const std::int64_t r_in = m < complex.m_max ? rank(m + 1) : 0;
    betti.push_back(complex.dimension(m) - r_out - r_in);
  }
  return betti;
}

EulerCharacteristics ComputeEulerCharacteristics(
    const ChainComplex& complex, const std::vector<std::int64_t>& betti) {
  EulerCharacteristics chi;
  for (std::size_t k = 0; k < betti.size(); ++k) {
    chi.classical += (k % 2 == 0 ? 1 : -1) * betti[k];
  }
  const mpz_class n_factorial = Factorial(complex.n);
  for (const auto& [m, bucket] : complex.buckets) {
    const int sign = (complex.m_max - m) % 2 == 0 ? 1 : -1;
    chi.alternating_dims += sign * bucket.dimension;
    for (const MarkedFatgraphPool& pool : bucket.pools) {
      mpq_class term(n_factorial, pool.num_automorphisms);
      term.canonicalize();
      chi.virtual_signed += (m % 2 == 0) ? term : mpq_class(-term);
    }
  }
  chi.virtual_magnitude = abs(chi.virtual_signed);
  return chi;
}

}  // namespace fatghom
