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

#include <vector>

#include "doctest.h"
#include "positroid/diagram.hpp"
#include "positroid/enumerate.hpp"
#include "positroid/essential.hpp"
#include "positroid/retrieval.hpp"

using namespace positroid;

namespace {

BoundedAffinePermutation perm(std::vector<int> w) { return BoundedAffinePermutation::from_window(w); }

RankConditionSet paper_conditions() { return RankConditionSet(5, {{1, {3, 2}}, {3, {1, 5}}}); }

RankConditionSet conditions_of(const std::vector<RankedInterval>& entries, int n) {
  return RankConditionSet::from_intervals(n, entries);
}

// q is at most p on every cyclic interval.
bool dominated(const BoundedAffinePermutation& q, const BoundedAffinePermutation& p) {
  for (const auto& I : all_cyclic_intervals(p.n())) {
    if (rank_interval(q, I) > rank_interval(p, I)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("condition set validation") {
  CHECK_THROWS_AS(RankConditionSet(5, {{1, {0, 2}}}), Error);
  CHECK_THROWS_AS(RankConditionSet(5, {{1, {1, 6}}}), Error);
  CHECK_THROWS_AS(RankConditionSet(5, {{-1, {1, 2}}}), Error);
  const auto C = RankConditionSet::from_intervals(8, {{1, CyclicInterval(8, 7, 3)}});
  CHECK(C.conditions()[0].square == Square{7, 3});
}

TEST_CASE("dotting counts") {
  ProperDotting d(5);
  for (int i = 1; i <= 5; ++i) {
    for (int m = 1; m <= 6; ++m) {
      CHECK(r_D(d, {i, m}) == 0);
      CHECK(d_D(d, {i, m}) == 0);
    }
  }
  d.place(3, 2);
  CHECK(d_D(d, {1, 5}) == 1);
  CHECK(d.is_proper());
  CHECK_FALSE(d.is_maximal());

  ProperDotting full(5);
  const auto p = perm({5, 6, 4, 7, 8});
  for (const auto& sq : dots(p)) full.place(sq.row, sq.col);
  CHECK(r_D(full, {1, 5}) == 3);
  CHECK(full.is_maximal());
  CHECK(full.to_permutation() == p);

  ProperDotting clash(3);
  clash.place(1, 2);
  clash.place(2, 1);  // same antidiagonal residue
  CHECK_FALSE(clash.is_proper());
}

TEST_CASE("the worked example") {
  const auto result = retrieve(paper_conditions(), true);
  REQUIRE(result.ok());
  CHECK(*result.permutation == perm({5, 6, 4, 7, 8}));
  CHECK(replay(5, result.trace).to_permutation() == *result.permutation);
  REQUIRE(!result.trace.empty());
  CHECK(result.trace.front().to_json() == R"({"event":"ConditionStart","rank":1,"row":3,"col":2})");
  CHECK(result.trace[2].to_json() == R"({"event":"DotPlaced","row":3,"col":2})");
  CHECK(verify_conditions(*result.permutation, paper_conditions()));

  CHECK(retrieve(paper_conditions()).trace.empty());
}

TEST_CASE("rank-zero inputs") {
  for (int n = 2; n <= 6; ++n) {
    const auto only_full = retrieve(RankConditionSet(n, {{0, {1, n}}}));
    REQUIRE(only_full.ok());
    CHECK(*only_full.permutation == BoundedAffinePermutation::identity(n));
    const auto with_loop = retrieve(RankConditionSet(n, {{0, {1, 1}}, {0, {1, n}}}));
    REQUIRE(with_loop.ok());
    CHECK(*with_loop.permutation == BoundedAffinePermutation::identity(n));
    const auto positive = retrieve(RankConditionSet(n, {{1, {1, 1}}, {0, {1, n}}}));
    CHECK_FALSE(positive.ok());
    CHECK(positive.failure->kind == RetrievalErrorKind::kNonMaximalLabel);
  }
}

TEST_CASE("error kinds") {
  const auto missing = retrieve(RankConditionSet(5, {{1, {3, 2}}}), true);
  CHECK(missing.failure->kind == RetrievalErrorKind::kMissingFullLabel);
  CHECK(error_name(missing.failure->kind) == "MissingFullLabel");
  CHECK(missing.trace.back().kind == TraceEvent::Kind::kError);

  // rank([1,2]) = 2 inside a rank-1 positroid on 3 elements
  CHECK(retrieve(RankConditionSet(3, {{2, {1, 2}}, {1, {1, 3}}})).failure->kind ==
        RetrievalErrorKind::kNonMaximalLabel);

  // A condition that cannot be met exactly.
  const auto bad = retrieve(RankConditionSet(4, {{0, {1, 2}}, {1, {1, 3}}, {2, {1, 4}}}));
  if (!bad.ok()) CHECK(error_name(bad.failure->kind) != "");
  CHECK(error_name(RetrievalErrorKind::kRankMismatch) == "RankMismatch");
  CHECK(error_name(RetrievalErrorKind::kNotProper) == "NotProper");
  CHECK(error_name(RetrievalErrorKind::kRowOverflow) == "RowOverflow");
  CHECK(error_name(RetrievalErrorKind::kNoProgress) == "NoProgress");
}

TEST_CASE("round trip and core, exhaustive") {
  for (int n = 1; n <= 7; ++n) {
    for_each_bounded_affine_permutation(n, std::nullopt, [&](const BoundedAffinePermutation& p) {
      const auto F = ranked_essential_family(p);
      const auto result = retrieve(RankConditionSet::from_family(F), true);
      REQUIRE(result.ok());
      CHECK(*result.permutation == p);
      CHECK(replay(n, result.trace).to_permutation() == p);
      if (n <= 6) {
        const auto c = core(F);
        const auto from_core = retrieve(conditions_of(c, n));
        REQUIRE(from_core.ok());
        CHECK(*from_core.permutation == p);
        for (std::size_t t = 0; t < c.size(); ++t) {
          auto fewer = c;
          fewer.erase(fewer.begin() + t);
          const auto r = retrieve(conditions_of(fewer, n));
          CHECK_FALSE((r.ok() && *r.permutation == p));
        }
      }
      return true;
    });
  }
}

TEST_CASE("success contract on subfamilies, n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    const auto everything = all_bounded_affine_permutations(n);
    std::vector<std::vector<RankedInterval>> cores;
    for (const auto& q : everything) cores.push_back(core(ranked_essential_family(q)));

    for (const auto& p : everything) {
      const auto entries = ranked_essential_family(p).entries();
      const std::size_t m = entries.size();
      for (std::size_t s = 0; s < (std::size_t{1} << m); ++s) {
        std::vector<RankedInterval> chosen;
        for (std::size_t t = 0; t < m; ++t) {
          if (s >> t & 1 || entries[t].interval.is_full()) chosen.push_back(entries[t]);
        }
        const auto C = conditions_of(chosen, n);
        const auto result = retrieve(C);
        // solutions whose core is covered by C
        bool covered_solution = false;
        for (std::size_t t = 0; t < everything.size(); ++t) {
          if (!verify_conditions(everything[t], C)) continue;
          bool covered = true;
          for (const auto& e : cores[t]) {
            covered = covered && std::find(chosen.begin(), chosen.end(), e) != chosen.end();
          }
          covered_solution = covered_solution || covered;
          if (result.ok()) CHECK(dominated(everything[t], *result.permutation));
        }
        CHECK(result.ok() == covered_solution);
        if (result.ok()) CHECK(verify_conditions(*result.permutation, C));
      }
    }
  }
}
