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

#ifndef POSITROID_FAMILY_HPP_
#define POSITROID_FAMILY_HPP_

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "positroid/core.hpp"

namespace positroid {

// A pair (rank, cyclic interval).
struct RankedInterval {
  int rank;
  CyclicInterval interval;

  friend bool operator==(const RankedInterval&, const RankedInterval&) = default;
  // Canonical order: by interval (start, len), then rank.
  friend auto operator<=>(const RankedInterval& a, const RankedInterval& b) {
    if (auto c = a.interval <=> b.interval; c != 0) return c;
    return a.rank <=> b.rank;
  }

  std::string to_string() const;
};

// A set of ranked cyclic intervals over [n] together with the rank k of
// the full set. Entries are kept in canonical order and their intervals are
// pairwise distinct. A family built from a permutation always contains
// (k, [1, n]); hand-built candidate families may lack it, which the chess
// validator reports.
class RankedEssentialFamily {
 public:
  // Throws Error on a size mismatch or a repeated interval.
  RankedEssentialFamily(int n, int k, std::vector<RankedInterval> entries);

  // Same as the constructor, adding (k, [1, n]) when no full entry is given.
  static RankedEssentialFamily with_full_entry(int n, int k,
                                               std::vector<RankedInterval> entries);

  int n() const { return n_; }
  int k() const { return k_; }
  const std::vector<RankedInterval>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  std::optional<RankedInterval> find(const CyclicInterval& interval) const;
  bool has_full_entry() const;

  friend bool operator==(const RankedEssentialFamily&,
                         const RankedEssentialFamily&) = default;

  // "{(1,[5,6]), (2,[1,4]), ...}"
  std::string to_string() const;

 private:
  int n_;
  int k_;
  std::vector<RankedInterval> entries_;
};

}  // namespace positroid

#endif  // POSITROID_FAMILY_HPP_
