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

// Ranked essential families as standalone objects: the rank function they
// induce on cyclic intervals, connectedness, excess and core, the (E1)-(E3)
// axioms, and reconstruction of the bounded affine permutation.

#ifndef POSITROID_ESSENTIAL_HPP_
#define POSITROID_ESSENTIAL_HPP_

#include <string>
#include <vector>

#include "positroid/core.hpp"
#include "positroid/family.hpp"

namespace positroid {

// min{ r + |I \ J| : (r, J) in family } together with |I| (the empty pair).
int rank_from_family(const RankedEssentialFamily& family, const CyclicInterval& interval);

// Same minimum, but over pairwise disjoint subfamilies of `entries`:
// min{ sum r_a + |I \ U J_a| }. With the connected entries this recovers the
// rank of every cyclic interval.
int rank_from_disjoint_subfamilies(const std::vector<RankedInterval>& entries,
                                   const CyclicInterval& interval);

// Entries that cannot be assembled from pairwise disjoint smaller entries,
// i.e. no disjoint (r_a, J_a) with J_a strictly inside I and
// r = sum r_a + |I \ U J_a|. The full entry is always kept: it carries the
// equality sum x = k rather than a decomposable rank condition.
std::vector<RankedInterval> connected_entries(const RankedEssentialFamily& family);

struct ExcessTable {
  // Aligned with RankedEssentialFamily::entries().
  std::vector<RankedInterval> entries;
  std::vector<int> excess;

  int at(const CyclicInterval& interval) const;
};

// e_I = |I| - r - sum_{J strictly inside I} e_J, smallest intervals first.
ExcessTable excess(const RankedEssentialFamily& family);

// Entries with positive excess, plus the full entry, which labels the rank
// of the positroid and is required by the retrieval algorithm.
std::vector<RankedInterval> core(const RankedEssentialFamily& family);

struct Violation {
  enum class Rule {
    kE1MissingFull,  // (k, [1, n]) absent or with the wrong rank
    kE1,             // |I| > r >= 0 and |[n] \ I| >= k - r > 0
    kE2,             // nested: 0 < r2 - r1 < |I2 \ I1|
    kE3Disjoint,     // submodularity across a gap
    kE3Overlap,      // submodularity across an overlap
    kE3NoContaining,  // no entry contains the union
    kE3Wrap           // covering pair meeting in two intervals A, B:
                      // r1 + r2 >= k + max(r(A), r(B))
  };

  Rule rule;
  std::vector<RankedInterval> entries;
  std::string message;
};

std::string rule_name(Violation::Rule rule);

struct ChessReport {
  std::vector<Violation> violations;
  bool valid() const { return violations.empty(); }
};

// Checks (E1), (E2), (E3) and returns every violation found.
ChessReport validate_chess(const RankedEssentialFamily& family);

class NotValidatedError : public Error {
 public:
  explicit NotValidatedError(ChessReport report);
  const ChessReport& report() const { return report_; }

 private:
  ChessReport report_;
};

// r(I) = min{ |I|, r + |I \ J| : (r, J) in family } for a family satisfying
// the axioms. Construction validates and throws NotValidatedError.
class RankFunction {
 public:
  explicit RankFunction(RankedEssentialFamily family);

  int operator()(const CyclicInterval& interval) const;
  // Rank of the set of residues of the lifts [first, last]: 0 when empty, k
  // when the lifts cover [n].
  int of_lifts(int first, int last) const;

  const RankedEssentialFamily& family() const { return family_; }

 private:
  RankedEssentialFamily family_;
};

RankFunction rank_function_from_axioms(const RankedEssentialFamily& family);

// pi(i) = min{ j >= i : r([i, j]) = r([i+1, j]) }. Throws NotValidatedError.
BoundedAffinePermutation permutation_from_family(const RankedEssentialFamily& family);

}  // namespace positroid

#endif  // POSITROID_ESSENTIAL_HPP_
