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

#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "positroid/diagram.hpp"
#include "positroid/geometry.hpp"
#include "positroid/realize.hpp"

using namespace positroid;

namespace {

RationalMatrix matrix(int k, int n, std::vector<std::vector<std::string>> rows) {
  return RationalMatrix::parse(k, n, rows);
}

RationalMatrix from_ints(int k, int n, const std::vector<long>& entries) {
  std::vector<mpq_class> q;
  for (long v : entries) q.emplace_back(v);
  return RationalMatrix(k, n, std::move(q));
}

// The point-line configuration of the eight-element rank-3 example: columns
// 5 and 6 parallel, 1..4 and 4..7 collinear in the affine chart.
RationalMatrix fixture() {
  return matrix(3, 8,
                {{"1", "1", "1", "1", "1", "1", "1", "1/2"},
                 {"8", "5", "2", "0", "-2", "-2", "-4", "3/2"},
                 {"40", "25", "10", "0", "-12", "-12", "-24", "1/2"}});
}

RationalMatrix vandermonde(int k, const std::vector<long>& nodes) {
  std::vector<long> e;
  for (int r = 0; r < k; ++r) {
    for (long x : nodes) {
      long v = 1;
      for (int t = 0; t < r; ++t) v *= x;
      e.push_back(v);
    }
  }
  return from_ints(k, static_cast<int>(nodes.size()), e);
}

ElementMask set_of(std::vector<int> elements) {
  ElementMask m = 0;
  for (int e : elements) m |= ElementMask{1} << (e - 1);
  return m;
}

}  // namespace

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-0.25") == mpq_class(-1, 4));
  CHECK(parse_rational("7/3") == mpq_class(7, 3));
  CHECK(parse_rational("-1/2") == mpq_class(-1, 2));
  CHECK(parse_rational("+2") == 2);
  CHECK(parse_rational("4/6") == mpq_class(2, 3));
  CHECK(parse_rational(".5") == mpq_class(1, 2));
  for (const char* bad : {"", "-", "1/0", "abc", "1.", "1/2/3", "1e3", "2/-3", " 1"}) {
    CHECK_THROWS_AS(parse_rational(bad), RealizeError);
  }
}

TEST_CASE("matrix shape errors") {
  CHECK_THROWS_AS(matrix(2, 3, {{"1", "0", "0"}}), RealizeError);
  CHECK_THROWS_AS(matrix(1, 3, {{"1", "0"}}), RealizeError);
  CHECK_THROWS_AS(from_ints(3, 2, {1, 0, 0, 1, 0, 0}), RealizeError);
}

TEST_CASE("matroid bases") {
  const auto id = matrix(2, 4, {{"1", "0", "0", "0"}, {"0", "1", "0", "0"}});
  CHECK(matroid_bases(id) == std::vector<ElementMask>{set_of({1, 2})});

  const auto generic = from_ints(2, 4, {1, 1, 1, 1, 1, 2, 3, 4});
  CHECK(matroid_bases(generic).size() == 6);

  const auto loop4 = from_ints(2, 4, {1, 1, 1, 0, 0, 1, 2, 0});
  CHECK(matroid_bases(loop4) ==
        std::vector<ElementMask>{set_of({1, 2}), set_of({1, 3}), set_of({2, 3})});

  try {
    matroid_bases(from_ints(2, 3, {1, 2, 3, 2, 4, 6}));
    FAIL("expected NotFullRank");
  } catch (const RealizeError& e) {
    CHECK(e.kind() == RealizeError::Kind::kNotFullRank);
  }
  CHECK_THROWS_AS(matroid_bases(vandermonde(2, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13})),
                  TooLargeError);
  CHECK(matrix_rank(from_ints(2, 3, {1, 2, 3, 2, 4, 6})) == 1);
}

TEST_CASE("non-negative minors") {
  const auto v = vandermonde(3, {1, 2, 3, 4, 5});
  CHECK(is_positively_realizing(v));
  CHECK(minor_sign(v, {1, 2, 3}) == 1);
  const auto swapped = vandermonde(3, {1, 3, 2, 4, 5});
  CHECK_FALSE(is_positively_realizing(swapped));
  CHECK(minor_sign(swapped, {1, 2, 3}) == -1);
  // Appending a zero column leaves the verdict alone.
  CHECK(is_positively_realizing(from_ints(2, 4, {1, 1, 1, 0, 1, 2, 3, 0})));
  CHECK_FALSE(is_positively_realizing(from_ints(2, 4, {1, 1, 1, 0, 3, 2, 1, 0})));
}

TEST_CASE("permutation from matrix") {
  const auto M = fixture();
  CHECK(is_positively_realizing(M));
  CHECK(permutation_from_matrix(M) == BoundedAffinePermutation::from_window(std::vector<int>{3, 4, 8, 7, 6, 9, 10, 13}));

  const auto coloops = from_ints(2, 4, {1, 0, 0, 0, 0, 1, 0, 0});
  CHECK(permutation_from_matrix(coloops).window() == std::vector<int>{5, 6, 3, 4});

  const auto zero2 = from_ints(2, 3, {1, 0, 1, 0, 0, 1});
  CHECK(permutation_from_matrix(zero2).eval(2) == 2);

  CHECK(permutation_from_matrix(RationalMatrix(0, 3, {})) == BoundedAffinePermutation::identity(3));

  try {
    permutation_from_matrix(vandermonde(3, {1, 3, 2, 4, 5}));
    FAIL("expected NotNonNegative");
  } catch (const RealizeError& e) {
    CHECK(e.kind() == RealizeError::Kind::kNotNonNegative);
  }
  CHECK_NOTHROW(permutation_from_matrix(vandermonde(3, {1, 3, 2, 4, 5}), false));
  try {
    permutation_from_matrix(from_ints(2, 3, {1, 2, 3, 2, 4, 6}));
    FAIL("expected NotFullRank");
  } catch (const RealizeError& e) {
    CHECK(e.kind() == RealizeError::Kind::kNotFullRank);
  }
}

TEST_CASE("random positive matrices agree with the combinatorial bases") {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> entry(-1, 2);
  int positive = 0;
  for (int t = 0; t < 40000; ++t) {
    const int n = 2 + t % 5;
    const int k = 1 + (t / 5) % std::min(3, n);
    std::vector<long> e(k * n);
    for (auto& x : e) x = entry(rng);
    const auto M = from_ints(k, n, e);
    if (matrix_rank(M) != k || !is_positively_realizing(M)) continue;
    ++positive;
    const auto p = permutation_from_matrix(M);
    const auto b = matroid_bases(M);
    CHECK(b == bases(ranked_essential_family(p)));
    auto expected = oracle::bases(p);
    std::sort(expected.begin(), expected.end());
    auto got = b;
    std::sort(got.begin(), got.end());
    CHECK(got == expected);
  }
  CHECK(positive > 1000);
}
