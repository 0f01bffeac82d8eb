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

#include "fatghom/rank.h"

#include <gmpxx.h>

#include <algorithm>
#include <random>
#include <utility>

namespace fatghom {

namespace {

template <typename V>
struct SparseColumn {
  std::vector<int> rows;
  std::vector<V> values;

  std::size_t size() const { return rows.size(); }
  // Position of `row`, or -1.
  int Find(int row) const {
    auto it = std::lower_bound(rows.begin(), rows.end(), row);
    return (it != rows.end() && *it == row) ? static_cast<int>(it - rows.begin()) : -1;
  }
};

class ModularField {
 public:
  using Value = std::uint64_t;

  explicit ModularField(std::uint32_t p) : p_(p) {}

  Value FromInt(std::int64_t x) const {
    const std::int64_t r = x % static_cast<std::int64_t>(p_);
    return static_cast<Value>(r < 0 ? r + p_ : r);
  }
  bool IsZero(const Value& v) const { return v == 0; }

  // Scales the pivot column so that its pivot entry is 1.
  void Prepare(SparseColumn<Value>& v, int pos) const {
    const Value inv = Inverse(v.values[pos]);
    for (Value& x : v.values) x = x * inv % p_;
  }

  // w <- w - w[row] * v, with v[row] == 1.
  void Eliminate(SparseColumn<Value>& w, const SparseColumn<Value>& v, int pos_v,
                 int pos_w) const {
    (void)pos_v;
    const Value f = p_ - w.values[pos_w];
    SparseColumn<Value> out;
    out.rows.reserve(w.size() + v.size());
    out.values.reserve(w.size() + v.size());
    std::size_t i = 0, j = 0;
    while (i < w.size() || j < v.size()) {
      if (j == v.size() || (i < w.size() && w.rows[i] < v.rows[j])) {
        out.rows.push_back(w.rows[i]);
        out.values.push_back(w.values[i++]);
      } else if (i == w.size() || v.rows[j] < w.rows[i]) {
        out.rows.push_back(v.rows[j]);
        out.values.push_back(v.values[j++] * f % p_);
      } else {
        const Value x = (w.values[i] + v.values[j] * f) % p_;
        if (x != 0) {
          out.rows.push_back(w.rows[i]);
          out.values.push_back(x);
        }
        ++i;
        ++j;
      }
    }
    w = std::move(out);
  }

 private:
  Value Inverse(Value a) const {
    Value result = 1, base = a, e = p_ - 2;
    while (e > 0) {
      if (e & 1) result = result * base % p_;
      base = base * base % p_;
      e >>= 1;
    }
    return result;
  }

  std::uint64_t p_;
};

class IntegerRing {
 public:
  using Value = mpz_class;

  Value FromInt(std::int64_t x) const { return mpz_class(static_cast<long>(x)); }
  bool IsZero(const Value& v) const { return v == 0; }
  void Prepare(SparseColumn<Value>&, int) const {}

  // w <- a w - b v with a = v[row] / d, b = w[row] / d, d = gcd, followed by
  // removal of the content of w.
  void Eliminate(SparseColumn<Value>& w, const SparseColumn<Value>& v, int pos_v,
                 int pos_w) const {
    mpz_class d = gcd(v.values[pos_v], w.values[pos_w]);
    const mpz_class a = v.values[pos_v] / d;
    const mpz_class b = w.values[pos_w] / d;
    SparseColumn<Value> out;
    out.rows.reserve(w.size() + v.size());
    out.values.reserve(w.size() + v.size());
    mpz_class x;
    std::size_t i = 0, j = 0;
    while (i < w.size() || j < v.size()) {
      if (j == v.size() || (i < w.size() && w.rows[i] < v.rows[j])) {
        out.rows.push_back(w.rows[i]);
        out.values.push_back(a * w.values[i++]);
      } else if (i == w.size() || v.rows[j] < w.rows[i]) {
        out.rows.push_back(v.rows[j]);
        out.values.push_back(-b * v.values[j++]);
      } else {
        x = a * w.values[i] - b * v.values[j];
        if (x != 0) {
          out.rows.push_back(w.rows[i]);
          out.values.push_back(x);
        }
        ++i;
        ++j;
      }
    }
    mpz_class content = 0;
    for (const mpz_class& y : out.values) {
      content = gcd(content, y);
      if (content == 1) break;
    }
    if (content > 1) {
      for (mpz_class& y : out.values) mpz_divexact(y.get_mpz_t(), y.get_mpz_t(), content.get_mpz_t());
    }
    w = std::move(out);
  }
};

// Column-oriented elimination. Each step takes the shortest live column
// (lowest index on ties) as pivot column and, within it, the row met by the
// fewest live columns (lowest row on ties), then clears that row from every
// other live column.
template <typename Field>
std::int64_t EliminationRank(const SparseIntegerMatrix& m, const Field& field,
                             bool parallel) {
  using V = typename Field::Value;
  const int num_cols = m.cols();
  std::vector<SparseColumn<V>> cols(num_cols);
  std::vector<int> row_count(m.rows(), 0);
  std::vector<char> live(num_cols, 0);
  for (int c = 0; c < num_cols; ++c) {
    std::span<const int> rows = m.ColumnRows(c);
    std::span<const std::int64_t> values = m.ColumnValues(c);
    for (std::size_t k = 0; k < rows.size(); ++k) {
      V x = field.FromInt(values[k]);
      if (field.IsZero(x)) continue;
      cols[c].rows.push_back(rows[k]);
      cols[c].values.push_back(std::move(x));
      ++row_count[rows[k]];
    }
    live[c] = cols[c].size() > 0;
  }

  std::int64_t rank = 0;
  std::vector<int> targets;
  std::vector<int> positions;
  for (;;) {
    int pc = -1;
    for (int c = 0; c < num_cols; ++c) {
      if (!live[c]) continue;
      if (pc < 0 || cols[c].size() < cols[pc].size()) pc = c;
    }
    if (pc < 0) break;
    SparseColumn<V> pivot = std::move(cols[pc]);
    live[pc] = 0;
    ++rank;
    int pos = 0;
    for (std::size_t k = 1; k < pivot.size(); ++k) {
      if (row_count[pivot.rows[k]] < row_count[pivot.rows[pos]]) pos = static_cast<int>(k);
    }
    const int pivot_row = pivot.rows[pos];
    for (int r : pivot.rows) --row_count[r];
    field.Prepare(pivot, pos);

    targets.clear();
    positions.clear();
    for (int c = 0; c < num_cols; ++c) {
      if (!live[c]) continue;
      const int p = cols[c].Find(pivot_row);
      if (p >= 0) {
        targets.push_back(c);
        positions.push_back(p);
      }
    }
    for (int c : targets) {
      for (int r : cols[c].rows) --row_count[r];
    }
    const std::int64_t num_targets = static_cast<std::int64_t>(targets.size());
#pragma omp parallel for schedule(dynamic, 16) if (parallel && num_targets > 32)
    for (std::int64_t t = 0; t < num_targets; ++t) {
      field.Eliminate(cols[targets[t]], pivot, pos, positions[t]);
    }
    for (int c : targets) {
      for (int r : cols[c].rows) ++row_count[r];
      if (cols[c].size() == 0) live[c] = 0;
    }
  }
  return rank;
}

}  // namespace

std::int64_t RankExact(const SparseIntegerMatrix& m, bool parallel) {
  return EliminationRank(m, IntegerRing{}, parallel);
}

std::int64_t RankModulo(const SparseIntegerMatrix& m, std::uint32_t prime,
                        bool parallel) {
  return EliminationRank(m, ModularField(prime), parallel);
}

std::vector<std::uint32_t> RandomPrimes(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> start((1u << 30) + 1, (1u << 31) - 4096);
  std::vector<std::uint32_t> primes;
  while (static_cast<int>(primes.size()) < count) {
    mpz_class p = start(rng);
    mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
    const std::uint32_t q = static_cast<std::uint32_t>(p.get_ui());
    if (std::find(primes.begin(), primes.end(), q) == primes.end()) primes.push_back(q);
  }
  return primes;
}

RankResult ComputeRank(const SparseIntegerMatrix& m, const RankOptions& options) {
  RankResult result;
  if (m.cols() <= options.exact_column_limit) {
    result.rank = RankExact(m, options.parallel);
    return result;
  }
  result.primes = RandomPrimes(options.seed, 2);
  const std::int64_t r1 = RankModulo(m, result.primes[0], options.parallel);
  const std::int64_t r2 = RankModulo(m, result.primes[1], options.parallel);
  if (r1 == r2) {
    result.rank = r1;
    result.method = RankMethod::kModular;
  } else {
    result.rank = RankExact(m, options.parallel);
    result.escalated = true;
  }
  return result;
}

}  // namespace fatghom
