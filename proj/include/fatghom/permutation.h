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

// Permutations of [0, n) stored as image vectors.

#ifndef FATGHOM_PERMUTATION_H_
#define FATGHOM_PERMUTATION_H_

#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <vector>

namespace fatghom {

class Permutation {
 public:
  Permutation() = default;
  // Throws kInvalidPermutations unless `images` is a bijection on [0, n).
  explicit Permutation(std::vector<int> images);
  Permutation(std::initializer_list<int> images)
      : Permutation(std::vector<int>(images)) {}
  static Permutation Identity(int n);
  // Inverse of Rank().
  static Permutation FromRank(int n, std::int64_t rank);

  int size() const { return static_cast<int>(images_.size()); }
  int operator[](int i) const { return images_[i]; }
  const std::vector<int>& images() const { return images_; }

  bool IsIdentity() const;
  Permutation Inverse() const;
  // +1 for even permutations, -1 for odd ones.
  int Sign() const;
  // Position in the lexicographic listing of all permutations of [0, n).
  std::int64_t Rank() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

// (a * b)[i] == a[b[i]], i.e. apply b first.
Permutation operator*(const Permutation& a, const Permutation& b);

std::ostream& operator<<(std::ostream& os, const Permutation& p);

std::int64_t Factorial(int n);

// Sign of an arbitrary bijection on [0, n) given as an image vector; the
// vector is not validated.
int PermutationSign(const std::vector<int>& images);

}  // namespace fatghom

#endif  // FATGHOM_PERMUTATION_H_
