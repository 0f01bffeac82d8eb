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

// Closed-form counts of permutations and fatgraphs, in exact arithmetic.

#ifndef FATGHOM_COUNTING_H_
#define FATGHOM_COUNTING_H_

#include <gmpxx.h>

namespace fatghom {

// Permutations of [0, pq) that are a product of q disjoint p-cycles, counted
// as prod_{i=1..q} prod_{j=1..p-1} (p*i - j).
mpz_class CyclePermutationCount(int p, int q);
// k!! = k (k-2) (k-4) ... down to 1 or 2; 1 for k <= 0.
mpz_class DoubleFactorial(int k);
// Y(l) = (2l-2)! / ((l-1)! l!).
mpz_class Catalan(int l);
mpz_class FactorialZ(int k);

struct CountingReport {
  int g = 0;
  int n = 0;
  int xi = 0;     // 2g + n
  int m_max = 0;  // 6g + 3n - 6
  int m_min = 0;  // 2g + n - 1
  mpz_class cycle_permutations;  // C(3, 2 m_max / 3)
  mpz_class double_factorial;    // (2 m_max - 1)!!
  mpz_class catalan;             // Y(2 m_min)
  mpq_class n2_minus;            // n2_plus / (2 m_min)
  mpz_class n2_plus;             // (4m-2)! / ((2m-2)!! (2m)!), m = m_min
  mpz_class n3;                  // (2m-1)!! C(3, 2m/3), m = m_max
};

// Throws kInvalidSignature unless 2 - 2g - n < 0 and n > 0.
CountingReport MakeCountingReport(int g, int n);

}  // namespace fatghom

#endif  // FATGHOM_COUNTING_H_
