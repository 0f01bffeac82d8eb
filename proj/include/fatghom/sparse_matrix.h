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

// Sparse integer matrices in compressed-column form.

#ifndef FATGHOM_SPARSE_MATRIX_H_
#define FATGHOM_SPARSE_MATRIX_H_

#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <vector>

namespace fatghom {

class SparseIntegerMatrix {
 public:
  struct Entry {
    int row = 0;
    int col = 0;
    std::int64_t value = 0;
  };

  SparseIntegerMatrix() = default;
  SparseIntegerMatrix(int rows, int cols);
  // Entries are summed per position; zero sums are dropped.
  static SparseIntegerMatrix FromTriplets(int rows, int cols,
                                          std::vector<Entry> triplets);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::int64_t nnz() const { return static_cast<std::int64_t>(row_index_.size()); }

  // Rows and values of column c, rows ascending.
  std::span<const int> ColumnRows(int c) const;
  std::span<const std::int64_t> ColumnValues(int c) const;
  std::int64_t At(int row, int col) const;
  // All entries ordered by (col, row).
  std::vector<Entry> Entries() const;

  SparseIntegerMatrix Transpose() const;
  bool IsZero() const { return row_index_.empty(); }

  // Coordinate text: a "rows cols nnz" header then one "r c v" line per
  // entry, 0-based.
  void WriteCoordinate(std::ostream& os) const;
  // Throws kIo on malformed input.
  static SparseIntegerMatrix ReadCoordinate(std::istream& is);

  friend bool operator==(const SparseIntegerMatrix&, const SparseIntegerMatrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::int64_t> col_start_{0};
  std::vector<int> row_index_;
  std::vector<std::int64_t> values_;
};

// Exact product a * b. Throws kInvalidSignature on a shape mismatch.
SparseIntegerMatrix Multiply(const SparseIntegerMatrix& a,
                             const SparseIntegerMatrix& b);

}  // namespace fatghom

#endif  // FATGHOM_SPARSE_MATRIX_H_
