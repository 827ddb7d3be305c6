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

// Small-rank specialization: deficient flats (flats whose rank is smaller
// than their size) and the rank-2 positroid test.

#ifndef POSITROID_SMALLRANK_HPP_
#define POSITROID_SMALLRANK_HPP_

#include <compare>
#include <string>
#include <vector>

#include "positroid/core.hpp"
#include "positroid/family.hpp"

namespace positroid {

struct DeficientFlat {
  int rank;
  ElementMask set;

  friend bool operator==(const DeficientFlat&, const DeficientFlat&) = default;
  friend auto operator<=>(const DeficientFlat&, const DeficientFlat&) = default;
};

struct DeficientFlatFamily {
  int n;
  std::vector<DeficientFlat> entries;  // sorted

  friend bool operator==(const DeficientFlatFamily&, const DeficientFlatFamily&) = default;
};

inline constexpr int kDefaultFlatBound = 12;

// Flats F of the positroid described by the family with rank(F) < |F|,
// computed from its bases. Throws TooLargeError when n > bound.
DeficientFlatFamily deficient_flats(const RankedEssentialFamily& family,
                                    int bound = kDefaultFlatBound);

// Entries of a ranked family as (rank, set) pairs, for comparison with
// deficient flats.
DeficientFlatFamily as_flat_family(const RankedEssentialFamily& family);

bool is_cyclic_interval(ElementMask set, int n);

// A rank-2 matroid given by its parallel classes and loops.
struct Rank2Matroid {
  int n;
  std::vector<std::vector<int>> classes;
  std::vector<int> loops;
};

class Rank2Error : public Error {
 public:
  enum class Kind { kNotPartition, kHasLoop, kNotRank2 };
  Rank2Error(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// Parallel classes with two or more elements (rank 1) and the ground set
// (rank 2, when n > 2). Validates the matroid; throws Rank2Error.
DeficientFlatFamily deficient_flats(const Rank2Matroid& matroid);

// True iff every deficient flat is a cyclic interval.
bool is_positroid_rank2(const DeficientFlatFamily& flats);
// Validates the matroid (throws Rank2Error), then tests its flats.
bool is_positroid_rank2(const Rank2Matroid& matroid);

}  // namespace positroid

#endif  // POSITROID_SMALLRANK_HPP_
