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

#include "fatghom/counting.h"

#include <string>

#include "fatghom/error.h"
#include "fatghom/fatgraph.h"

namespace fatghom {

mpz_class CyclePermutationCount(int p, int q) {
  mpz_class count = 1;
  for (int i = 1; i <= q; ++i) {
    for (int j = 1; j <= p - 1; ++j) count *= p * i - j;
  }
  return count;
}

mpz_class DoubleFactorial(int k) {
  mpz_class result = 1;
  for (; k > 1; k -= 2) result *= k;
  return result;
}

mpz_class FactorialZ(int k) {
  mpz_class result;
  mpz_fac_ui(result.get_mpz_t(), k < 0 ? 0 : k);
  return result;
}

mpz_class Catalan(int l) {
  if (l < 1) return 0;
  return FactorialZ(2 * l - 2) / (FactorialZ(l - 1) * FactorialZ(l));
}

CountingReport MakeCountingReport(int g, int n) {
  if (!IsStableSignature(g, n)) {
    throw FatgraphError(ErrorCode::kInvalidSignature,
                        "(g, n) = (" + std::to_string(g) + ", " + std::to_string(n) +
                            ") needs n > 0 and 2 - 2g - n < 0");
  }
  CountingReport r;
  r.g = g;
  r.n = n;
  r.xi = 2 * g + n;
  r.m_max = MaxEdges(g, n);
  r.m_min = MinEdges(g, n);
  // 2 m_max = 12g + 6n - 12 is always a multiple of 3.
  r.cycle_permutations = CyclePermutationCount(3, 2 * r.m_max / 3);
  r.double_factorial = DoubleFactorial(2 * r.m_max - 1);
  r.catalan = Catalan(2 * r.m_min);
  const int m = r.m_min;
  r.n2_plus = FactorialZ(4 * m - 2) / (DoubleFactorial(2 * m - 2) * FactorialZ(2 * m));
  r.n2_minus = mpq_class(r.n2_plus, 2 * m);
  r.n2_minus.canonicalize();
  r.n3 = r.double_factorial * r.cycle_permutations;
  return r;
}

}  // namespace fatghom
