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

#include "fatghom/permutation.h"

#include <numeric>

#include "fatghom/error.h"

namespace fatghom {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int x : images_) {
    if (x < 0 || x >= size() || seen[x]) {
      throw FatgraphError(ErrorCode::kInvalidPermutations,
                          "image vector is not a bijection");
    }
    seen[x] = true;
  }
}

Permutation Permutation::Identity(int n) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

Permutation Permutation::FromRank(int n, std::int64_t rank) {
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<int> images;
  images.reserve(n);
  for (int i = n - 1; i >= 0; --i) {
    const std::int64_t f = Factorial(i);
    const int k = static_cast<int>(rank / f);
    rank %= f;
    images.push_back(pool[k]);
    pool.erase(pool.begin() + k);
  }
  return Permutation(std::move(images));
}

bool Permutation::IsIdentity() const {
  for (int i = 0; i < size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::Inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < size(); ++i) inv[images_[i]] = i;
  return Permutation(std::move(inv));
}

int Permutation::Sign() const { return PermutationSign(images_); }

std::int64_t Permutation::Rank() const {
  const int n = size();
  std::int64_t rank = 0;
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n; ++j) {
      if (images_[j] < images_[i]) ++smaller;
    }
    rank += smaller * Factorial(n - 1 - i);
  }
  return rank;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  std::vector<int> images(b.size());
  for (int i = 0; i < b.size(); ++i) images[i] = a[b[i]];
  return Permutation(std::move(images));
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) {
  os << '[';
  for (int i = 0; i < p.size(); ++i) os << (i ? " " : "") << p[i];
  return os << ']';
}

std::int64_t Factorial(int n) {
  std::int64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

int PermutationSign(const std::vector<int>& images) {
  std::vector<bool> visited(images.size(), false);
  int sign = 1;
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (visited[i]) continue;
    std::size_t length = 0;
    for (std::size_t j = i; !visited[j]; j = images[j]) {
      visited[j] = true;
      ++length;
    }
    if (length % 2 == 0) sign = -sign;
  }
  return sign;
}

}  // namespace fatghom
