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

#include <algorithm>
#include <functional>
#include <set>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "positroid/diagram.hpp"
#include "positroid/enumerate.hpp"
#include "positroid/geometry.hpp"
#include "positroid/smallrank.hpp"

using namespace positroid;

namespace {

ElementMask set_of(std::vector<int> elements) {
  ElementMask m = 0;
  for (int e : elements) m |= ElementMask{1} << (e - 1);
  return m;
}

// Rank-2 loopless matroids given by set partitions into at least two blocks.
void for_each_partition(int n, const std::function<void(const Rank2Matroid&)>& visit) {
  std::vector<int> block(n, 0);
  std::function<void(int, int)> rec = [&](int i, int used) {
    if (i == n) {
      if (used < 2) return;
      Rank2Matroid m{n, std::vector<std::vector<int>>(used), {}};
      for (int e = 0; e < n; ++e) m.classes[block[e]].push_back(e + 1);
      visit(m);
      return;
    }
    for (int b = 0; b <= used; ++b) {
      block[i] = b;
      rec(i + 1, std::max(used, b + 1));
    }
  };
  rec(0, 0);
}

}  // namespace

TEST_CASE("cyclic interval test") {
  CHECK(is_cyclic_interval(set_of({7, 8, 1}), 8));
  CHECK(is_cyclic_interval(set_of({1, 2, 3, 4}), 4));
  CHECK_FALSE(is_cyclic_interval(set_of({1, 3}), 4));
  CHECK_FALSE(is_cyclic_interval(0, 4));
}

TEST_CASE("rank-2 verdicts") {
  CHECK(is_positroid_rank2(Rank2Matroid{5, {{1, 2}, {3}, {4, 5}}, {}}));
  CHECK_FALSE(is_positroid_rank2(Rank2Matroid{4, {{1, 3}, {2}, {4}}, {}}));
  try {
    is_positroid_rank2(Rank2Matroid{4, {{1, 2, 3, 4}}, {}});
    FAIL("expected NotRank2");
  } catch (const Rank2Error& e) {
    CHECK(e.kind() == Rank2Error::Kind::kNotRank2);
  }
  try {
    is_positroid_rank2(Rank2Matroid{4, {{1, 2}, {3}}, {4}});
    FAIL("expected HasLoop");
  } catch (const Rank2Error& e) {
    CHECK(e.kind() == Rank2Error::Kind::kHasLoop);
  }
  try {
    is_positroid_rank2(Rank2Matroid{4, {{1, 2}, {2, 3}}, {}});
    FAIL("expected a partition error");
  } catch (const Rank2Error& e) {
    CHECK(e.kind() == Rank2Error::Kind::kNotPartition);
  }
}

TEST_CASE("deficient flats of families") {
  const auto U = ranked_essential_family(BoundedAffinePermutation::uniform(2, 6));
  const auto flats = deficient_flats(U);
  REQUIRE(flats.entries.size() == 1);
  CHECK(flats.entries[0] == DeficientFlat{2, set_of({1, 2, 3, 4, 5, 6})});

  // Rank 3: the flat {1,2,5} is not an interval, and {1,2} is not closed.
  const RankedEssentialFamily R(7, 3,
                                {{1, CyclicInterval(7, 1, 2)}, {2, CyclicInterval(7, 1, 5)},
                                 {2, CyclicInterval(7, 5, 5)}, {3, CyclicInterval::full(7)}});
  const auto rf = deficient_flats(R);
  CHECK(std::find(rf.entries.begin(), rf.entries.end(), DeficientFlat{1, set_of({1, 2, 5})}) !=
        rf.entries.end());
  for (const auto& f : rf.entries) CHECK(f.set != set_of({1, 2}));
  CHECK_FALSE(rf == as_flat_family(R));

  CHECK_THROWS_AS(deficient_flats(ranked_essential_family(BoundedAffinePermutation::uniform(2, 13))),
                  TooLargeError);
}

TEST_CASE("deficient flats agree with the brute-force oracle, n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    for_each_bounded_affine_permutation(n, std::nullopt, [&](const BoundedAffinePermutation& p) {
      const auto rk = oracle::rank_table(oracle::bases(p), n);
      std::vector<std::pair<int, oracle::Mask>> got;
      for (const auto& f : deficient_flats(ranked_essential_family(p)).entries) got.push_back({f.rank, f.set});
      CHECK(got == oracle::deficient_flats(rk, n));
      return true;
    });
  }
}

TEST_CASE("loopless rank 2: flats are the essential family, n <= 8") {
  for (int n = 2; n <= 8; ++n) {
    for_each_bounded_affine_permutation(n, 2, [&](const BoundedAffinePermutation& p) {
      if (!loops(p).empty()) return true;
      const auto F = ranked_essential_family(p);
      auto expected = as_flat_family(F);
      // On two elements the ground set has full rank and is not deficient.
      if (n == 2) expected.entries.clear();
      CHECK(deficient_flats(F) == expected);
      return true;
    });
  }
}

TEST_CASE("rank-2 criterion against permutations, n <= 7") {
  for (int n = 2; n <= 7; ++n) {
    // Parallel-class partitions realized by loopless rank-2 permutations.
    std::set<std::vector<ElementMask>> realized;
    for_each_bounded_affine_permutation(n, 2, [&](const BoundedAffinePermutation& p) {
      if (!loops(p).empty()) return true;
      const auto rk = oracle::rank_table(oracle::bases(p), n);
      std::vector<ElementMask> classes;
      ElementMask seen = 0;
      for (int e = 0; e < n; ++e) {
        if (seen >> e & 1) continue;
        ElementMask cls = 0;
        for (int f = 0; f < n; ++f) {
          if (rk[(ElementMask{1} << e) | (ElementMask{1} << f)] == 1) cls |= ElementMask{1} << f;
        }
        seen |= cls;
        classes.push_back(cls);
      }
      std::sort(classes.begin(), classes.end());
      realized.insert(classes);
      return true;
    });
    for_each_partition(n, [&](const Rank2Matroid& m) {
      std::vector<ElementMask> classes;
      for (const auto& c : m.classes) classes.push_back(set_of(c));
      std::sort(classes.begin(), classes.end());
      CHECK(is_positroid_rank2(m) == (realized.count(classes) == 1));
    });
  }
}
