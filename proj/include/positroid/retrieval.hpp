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

// Reconstruction of a bounded affine permutation from rank conditions on
// cyclic intervals by placing dots on the periodic n x (n+1) array.
//
// Contract: retrieve() succeeds iff some positroid satisfies every condition
// exactly and its core is among the supplied conditions. On success the
// result is the rank-maximal positroid satisfying the conditions.
//
// Cost: a d_D / r_D query walks at most n+1 rows, O(n). A run places at
// most n dots, each after a column search of at most n+1 queries, and
// evaluates every condition a bounded number of times: O(n^3 + m n) for m
// conditions.

#ifndef POSITROID_RETRIEVAL_HPP_
#define POSITROID_RETRIEVAL_HPP_

#include <optional>
#include <string>
#include <vector>

#include "positroid/core.hpp"
#include "positroid/diagram.hpp"
#include "positroid/family.hpp"

namespace positroid {

// rank([i, i+j-1]) = rank, attached to the square (i, j).
struct RankCondition {
  int rank;
  Square square;

  friend bool operator==(const RankCondition&, const RankCondition&) = default;
};

class RankConditionSet {
 public:
  // Throws Error when a square lies outside [1, n] x [1, n] or a rank is
  // negative.
  RankConditionSet(int n, std::vector<RankCondition> conditions);

  static RankConditionSet from_intervals(int n, const std::vector<RankedInterval>& entries);
  static RankConditionSet from_family(const RankedEssentialFamily& family) {
    return from_intervals(family.n(), family.entries());
  }

  int n() const { return n_; }
  const std::vector<RankCondition>& conditions() const { return conditions_; }

 private:
  int n_;
  std::vector<RankCondition> conditions_;
};

// Dots on the periodic array, at most one per row residue.
class ProperDotting {
 public:
  explicit ProperDotting(int n) : n_(n), col_(n, 0) {}

  int n() const { return n_; }
  // Column of the dot in the row (any lift), 0 when the row is empty.
  int column(int row) const { return col_[residue(row, n_) - 1]; }
  bool has_dot(int row) const { return column(row) != 0; }
  void place(int row, int col) { col_[residue(row, n_) - 1] = col; }

  int dot_count() const;
  bool is_maximal() const { return dot_count() == n_; }
  // No two dots share an antidiagonal residue (row + col mod n).
  bool is_proper() const;

  // Dots in P_(sq) and T_(sq), periodic copies included.
  int rank_at(Square sq) const;
  int dependency_at(Square sq) const;

  // Requires a maximal dotting: pi(h) = h + col - 1.
  BoundedAffinePermutation to_permutation() const;

 private:
  int n_;
  std::vector<int> col_;
};

int r_D(const ProperDotting& dotting, Square sq);
int d_D(const ProperDotting& dotting, Square sq);

struct TraceEvent {
  enum class Kind { kConditionStart, kExcessComputed, kDotPlaced, kRowFilled, kError };

  Kind kind;
  int rank = 0;     // kConditionStart
  Square square{};  // kConditionStart: condition square; kDotPlaced/kRowFilled: dot
  int excess = 0;   // kExcessComputed
  std::string error{};  // kError: failure kind
  std::string context{};

  // One JSON object, no trailing newline.
  std::string to_json() const;
};

using RetrievalTrace = std::vector<TraceEvent>;

// Replays the kDotPlaced / kRowFilled events onto an empty dotting.
ProperDotting replay(int n, const RetrievalTrace& trace);

enum class RetrievalErrorKind {
  kMissingFullLabel,
  kNonMaximalLabel,
  kNoProgress,
  kRowOverflow,
  kNotProper,
  kRankMismatch,
};

std::string error_name(RetrievalErrorKind kind);

struct RetrievalFailure {
  RetrievalErrorKind kind;
  std::string detail;
};

struct RetrievalResult {
  std::optional<BoundedAffinePermutation> permutation;
  std::optional<RetrievalFailure> failure;
  RetrievalTrace trace;  // empty unless requested

  bool ok() const { return permutation.has_value(); }
};

RetrievalResult retrieve(const RankConditionSet& conditions, bool trace = false);

// Whether rank_interval(p, [i, i+j-1]) = r for every condition.
bool verify_conditions(const BoundedAffinePermutation& p, const RankConditionSet& conditions);

}  // namespace positroid

#endif  // POSITROID_RETRIEVAL_HPP_
