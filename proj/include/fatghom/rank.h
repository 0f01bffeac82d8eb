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

// Exact rank of sparse integer matrices.
//
// Two interchangeable elimination paths share one kernel: arithmetic modulo a
// word-sized prime, and fraction-free elimination over big integers. Either
// path can run its row updates on an OpenMP team or serially; the serial run
// is the reference the parallel one is tested against.

#ifndef FATGHOM_RANK_H_
#define FATGHOM_RANK_H_

#include <cstdint>
#include <vector>

#include "fatghom/sparse_matrix.h"

namespace fatghom {

std::int64_t RankExact(const SparseIntegerMatrix& m, bool parallel = true);
// Rank over GF(prime); prime must be below 2^32.
std::int64_t RankModulo(const SparseIntegerMatrix& m, std::uint32_t prime,
                        bool parallel = true);

// `count` distinct primes in (2^30, 2^31), drawn deterministically from `seed`.
std::vector<std::uint32_t> RandomPrimes(std::uint64_t seed, int count);

enum class RankMethod { kExact, kModular };

struct RankOptions {
  std::uint64_t seed = 1;
  // Matrices with at most this many columns go straight to the exact path.
  int exact_column_limit = 5000;
  bool parallel = true;
};

struct RankResult {
  std::int64_t rank = 0;
  RankMethod method = RankMethod::kExact;
  std::vector<std::uint32_t> primes;
  // Set when the two modular ranks disagreed and exact elimination decided.
  bool escalated = false;
};

// Exact below the column limit. Above it, two random primes must agree, and
// a disagreement falls back to exact elimination.
RankResult ComputeRank(const SparseIntegerMatrix& m, const RankOptions& options = {});

}  // namespace fatghom

#endif  // FATGHOM_RANK_H_
