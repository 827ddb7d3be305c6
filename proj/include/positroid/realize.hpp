// Copyright 2026 The Authors.
//
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

// Realizations over the rationals: the matroid of a k x n matrix, the
// non-negativity of its maximal minors, and its bounded affine permutation.
// All arithmetic is exact (GMP).

#ifndef POSITROID_REALIZE_HPP_
#define POSITROID_REALIZE_HPP_

#include <gmpxx.h>

#include <string>
#include <vector>

#include "positroid/core.hpp"

namespace positroid {

class RealizeError : public Error {
 public:
  enum class Kind { kMalformed, kNotFullRank, kNotNonNegative };
  RealizeError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// "3", "-0.25", "7/3", "-1/2". Throws RealizeError(kMalformed).
mpq_class parse_rational(const std::string& text);

class RationalMatrix {
 public:
  // Row-major entries. Throws RealizeError(kMalformed) on a size mismatch or
  // k > n.
  RationalMatrix(int k, int n, std::vector<mpq_class> entries);
  static RationalMatrix parse(int k, int n, const std::vector<std::vector<std::string>>& rows);

  int k() const { return k_; }
  int n() const { return n_; }
  const mpq_class& at(int row, int col) const { return entries_[row * n_ + col]; }

  // Column c (0-based) scaled by the positive lcm of its denominators.
  // Scaling by positive constants leaves the sign of every minor alone.
  std::vector<mpz_class> integer_column(int c) const;

 private:
  int k_;
  int n_;
  std::vector<mpq_class> entries_;
};

inline constexpr int kDefaultMatrixBound = 12;

int matrix_rank(const RationalMatrix& m);

// Sign (-1, 0, 1) of the maximal minor on the given 1-based columns.
int minor_sign(const RationalMatrix& m, const std::vector<int>& columns);

// k-subsets with a nonzero maximal minor, as masks in lexicographic order.
// Throws RealizeError(kNotFullRank) and TooLargeError when n > bound.
std::vector<ElementMask> matroid_bases(const RationalMatrix& m, int bound = kDefaultMatrixBound);

bool is_positively_realizing(const RationalMatrix& m);

// pi(i) = min{ j >= i : column i in the span of columns i+1..j }. Throws
// RealizeError(kNotFullRank), and kNotNonNegative when check_nonnegative
// is set and some maximal minor is negative.
BoundedAffinePermutation permutation_from_matrix(const RationalMatrix& m,
                                                 bool check_nonnegative = true);

}  // namespace positroid

#endif  // POSITROID_REALIZE_HPP_
