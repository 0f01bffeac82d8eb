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

#include "fatghom/sparse_matrix.h"

#include <algorithm>
#include <map>
#include <string>

#include "fatghom/error.h"

namespace fatghom {

SparseIntegerMatrix::SparseIntegerMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), col_start_(cols + 1, 0) {}

SparseIntegerMatrix SparseIntegerMatrix::FromTriplets(int rows, int cols,
                                                      std::vector<Entry> triplets) {
  std::sort(triplets.begin(), triplets.end(), [](const Entry& a, const Entry& b) {
    return a.col != b.col ? a.col < b.col : a.row < b.row;
  });
  SparseIntegerMatrix m(rows, cols);
  for (std::size_t i = 0; i < triplets.size();) {
    const Entry& t = triplets[i];
    if (t.row < 0 || t.row >= rows || t.col < 0 || t.col >= cols) {
      throw FatgraphError(ErrorCode::kIo, "matrix entry (" + std::to_string(t.row) +
                                              ", " + std::to_string(t.col) +
                                              ") out of range");
    }
    std::int64_t sum = 0;
    std::size_t j = i;
    for (; j < triplets.size() && triplets[j].row == t.row && triplets[j].col == t.col; ++j) {
      sum += triplets[j].value;
    }
    if (sum != 0) {
      m.row_index_.push_back(t.row);
      m.values_.push_back(sum);
      ++m.col_start_[t.col + 1];
    }
    i = j;
  }
  for (int c = 0; c < cols; ++c) m.col_start_[c + 1] += m.col_start_[c];
  return m;
}

std::span<const int> SparseIntegerMatrix::ColumnRows(int c) const {
  return {row_index_.data() + col_start_[c],
          static_cast<std::size_t>(col_start_[c + 1] - col_start_[c])};
}

std::span<const std::int64_t> SparseIntegerMatrix::ColumnValues(int c) const {
  return {values_.data() + col_start_[c],
          static_cast<std::size_t>(col_start_[c + 1] - col_start_[c])};
}

std::int64_t SparseIntegerMatrix::At(int row, int col) const {
  std::span<const int> rows = ColumnRows(col);
  auto it = std::lower_bound(rows.begin(), rows.end(), row);
  if (it == rows.end() || *it != row) return 0;
  return ColumnValues(col)[it - rows.begin()];
}

std::vector<SparseIntegerMatrix::Entry> SparseIntegerMatrix::Entries() const {
  std::vector<Entry> out;
  out.reserve(row_index_.size());
  for (int c = 0; c < cols_; ++c) {
    for (std::int64_t k = col_start_[c]; k < col_start_[c + 1]; ++k) {
      out.push_back({row_index_[k], c, values_[k]});
    }
  }
  return out;
}

SparseIntegerMatrix SparseIntegerMatrix::Transpose() const {
  std::vector<Entry> t = Entries();
  for (Entry& e : t) std::swap(e.row, e.col);
  return FromTriplets(cols_, rows_, std::move(t));
}

void SparseIntegerMatrix::WriteCoordinate(std::ostream& os) const {
  os << rows_ << ' ' << cols_ << ' ' << nnz() << '\n';
  for (const Entry& e : Entries()) os << e.row << ' ' << e.col << ' ' << e.value << '\n';
}

SparseIntegerMatrix SparseIntegerMatrix::ReadCoordinate(std::istream& is) {
  int rows = 0, cols = 0;
  std::int64_t nnz = 0;
  if (!(is >> rows >> cols >> nnz) || rows < 0 || cols < 0 || nnz < 0) {
    throw FatgraphError(ErrorCode::kIo, "bad coordinate header");
  }
  std::vector<Entry> triplets(nnz);
  for (Entry& e : triplets) {
    if (!(is >> e.row >> e.col >> e.value)) {
      throw FatgraphError(ErrorCode::kIo, "truncated coordinate data");
    }
  }
  return FromTriplets(rows, cols, std::move(triplets));
}

SparseIntegerMatrix Multiply(const SparseIntegerMatrix& a,
                             const SparseIntegerMatrix& b) {
  if (a.cols() != b.rows()) {
    throw FatgraphError(ErrorCode::kInvalidSignature, "shape mismatch in product");
  }
  std::vector<SparseIntegerMatrix::Entry> out;
  std::map<int, std::int64_t> column;
  for (int c = 0; c < b.cols(); ++c) {
    column.clear();
    std::span<const int> b_rows = b.ColumnRows(c);
    std::span<const std::int64_t> b_vals = b.ColumnValues(c);
    for (std::size_t k = 0; k < b_rows.size(); ++k) {
      std::span<const int> a_rows = a.ColumnRows(b_rows[k]);
      std::span<const std::int64_t> a_vals = a.ColumnValues(b_rows[k]);
      for (std::size_t i = 0; i < a_rows.size(); ++i) {
        column[a_rows[i]] += a_vals[i] * b_vals[k];
      }
    }
    for (const auto& [r, v] : column) {
      if (v != 0) out.push_back({r, c, v});
    }
  }
  return SparseIntegerMatrix::FromTriplets(a.rows(), b.cols(), std::move(out));
}

}  // namespace fatghom
