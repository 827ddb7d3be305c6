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

#include "positroid/smallrank.hpp"

#include <algorithm>

#include "positroid/geometry.hpp"

namespace positroid {
namespace {

ElementMask ground_mask(int n) {
  return n == kMaxGroundSet ? ~ElementMask{0} : (ElementMask{1} << n) - 1;
}

void validate(const Rank2Matroid& m) {
  if (m.n < 1 || m.n > kMaxGroundSet) {
    throw Rank2Error(Rank2Error::Kind::kNotPartition, "rank-2 matroid: n out of range");
  }
  ElementMask seen = 0;
  auto take = [&](int e) {
    if (e < 1 || e > m.n) {
      throw Rank2Error(Rank2Error::Kind::kNotPartition,
                       "rank-2 matroid: element " + std::to_string(e) + " outside [1, " +
                           std::to_string(m.n) + "]");
    }
    const ElementMask bit = ElementMask{1} << (e - 1);
    if (seen & bit) {
      throw Rank2Error(Rank2Error::Kind::kNotPartition,
                       "rank-2 matroid: element " + std::to_string(e) + " listed twice");
    }
    seen |= bit;
  };
  for (const auto& cls : m.classes) {
    if (cls.empty()) {
      throw Rank2Error(Rank2Error::Kind::kNotPartition, "rank-2 matroid: empty parallel class");
    }
    for (int e : cls) take(e);
  }
  for (int e : m.loops) take(e);
  if (seen != ground_mask(m.n)) {
    throw Rank2Error(Rank2Error::Kind::kNotPartition,
                     "rank-2 matroid: classes and loops do not cover the ground set");
  }
  if (!m.loops.empty()) {
    throw Rank2Error(Rank2Error::Kind::kHasLoop, "rank-2 matroid: loops are not supported");
  }
  if (m.classes.size() < 2) {
    throw Rank2Error(Rank2Error::Kind::kNotRank2,
                     "rank-2 matroid: a single parallel class has rank 1");
  }
}

}  // namespace

DeficientFlatFamily deficient_flats(const RankedEssentialFamily& family, int bound) {
  const int n = family.n();
  if (n > bound) throw TooLargeError("deficient_flats", n, bound);
  const auto basis_masks = bases(family, bound);
  const std::size_t subsets = std::size_t{1} << n;

  std::vector<int> rank_of(subsets, 0);
  for (std::size_t s = 0; s < subsets; ++s) {
    int best = 0;
    for (ElementMask b : basis_masks) best = std::max(best, popcount(b & s));
    rank_of[s] = best;
  }

  DeficientFlatFamily out{n, {}};
  for (std::size_t s = 1; s < subsets; ++s) {
    const int r = rank_of[s];
    if (r >= popcount(s)) continue;
    bool closed = true;
    for (int x = 0; x < n && closed; ++x) {
      const std::size_t bit = std::size_t{1} << x;
      if (!(s & bit) && rank_of[s | bit] == r) closed = false;
    }
    if (closed) out.entries.push_back({r, static_cast<ElementMask>(s)});
  }
  std::sort(out.entries.begin(), out.entries.end());
  return out;
}

DeficientFlatFamily as_flat_family(const RankedEssentialFamily& family) {
  DeficientFlatFamily out{family.n(), {}};
  for (const auto& e : family.entries()) out.entries.push_back({e.rank, e.interval.mask()});
  std::sort(out.entries.begin(), out.entries.end());
  return out;
}

bool is_cyclic_interval(ElementMask set, int n) {
  const int len = popcount(set);
  if (len == 0) return false;
  if (len == n) return set == ground_mask(n);
  for (int start = 1; start <= n; ++start) {
    if (CyclicInterval(n, start, len).mask() == set) return true;
  }
  return false;
}

DeficientFlatFamily deficient_flats(const Rank2Matroid& matroid) {
  validate(matroid);
  DeficientFlatFamily out{matroid.n, {}};
  for (const auto& cls : matroid.classes) {
    if (cls.size() < 2) continue;
    ElementMask m = 0;
    for (int e : cls) m |= ElementMask{1} << (e - 1);
    out.entries.push_back({1, m});
  }
  if (matroid.n > 2) out.entries.push_back({2, ground_mask(matroid.n)});
  std::sort(out.entries.begin(), out.entries.end());
  return out;
}

bool is_positroid_rank2(const DeficientFlatFamily& flats) {
  return std::all_of(flats.entries.begin(), flats.entries.end(),
                     [&](const DeficientFlat& f) { return is_cyclic_interval(f.set, flats.n); });
}

bool is_positroid_rank2(const Rank2Matroid& matroid) {
  return is_positroid_rank2(deficient_flats(matroid));
}

}  // namespace positroid
