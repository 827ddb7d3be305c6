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

#include "positroid/geometry.hpp"

#include <algorithm>
#include <sstream>

#include "positroid/enumerate.hpp"
#include "positroid/essential.hpp"

namespace positroid {

int length(const BoundedAffinePermutation& p) {
  const int n = p.n();
  int inversions = 0;
  for (int i = 1; i <= n; ++i) {
    const int v = p.eval(i);
    for (int j = i + 1; j <= i + n; ++j) {
      if (v > p.eval(j)) ++inversions;
    }
  }
  return inversions;
}

int codim_from_family(const RankedEssentialFamily& family) {
  const ExcessTable table = excess(family);
  int total = 0;
  for (std::size_t i = 0; i < table.entries.size(); ++i) {
    total += (family.k() - table.entries[i].rank) * table.excess[i];
  }
  return total;
}

bool FacetSystem::contains(const std::vector<int>& point) const {
  if (static_cast<int>(point.size()) != n) return false;
  int sum = 0;
  for (int x : point) {
    if (x < 0 || x > 1) return false;
    sum += x;
  }
  if (sum != k) return false;
  for (const auto& ineq : inequalities) {
    int lhs = 0;
    for (int e : ineq.interval.elements()) lhs += point[e - 1];
    if (lhs > ineq.rhs) return false;
  }
  return true;
}

std::string FacetSystem::to_h_representation() const {
  std::ostringstream os;
  os << "# positroid polytope n=" << n << " k=" << k << "\n";
  auto row = [&](const std::vector<int>& coeffs, const char* rel, int rhs) {
    for (int c : coeffs) os << c << ' ';
    os << rel << ' ' << rhs << '\n';
  };
  for (int i = 0; i < n; ++i) {
    std::vector<int> coeffs(n, 0);
    coeffs[i] = 1;
    row(coeffs, ">=", 0);
    row(coeffs, "<=", 1);
  }
  row(std::vector<int>(n, 1), "=", k);
  for (const auto& ineq : inequalities) {
    std::vector<int> coeffs(n, 0);
    for (int e : ineq.interval.elements()) coeffs[e - 1] = 1;
    row(coeffs, "<=", ineq.rhs);
  }
  return os.str();
}

FacetSystem facet_system(const RankedEssentialFamily& family) {
  FacetSystem system{family.n(), family.k(), {}};
  for (const auto& e : variety_conditions(family)) {
    system.inequalities.push_back({e.interval, e.rank});
  }
  return system;
}

std::vector<ElementMask> bases(const RankedEssentialFamily& family, int bound) {
  const int n = family.n();
  const int k = family.k();
  if (n > bound) throw TooLargeError("bases", n, bound);
  if (k < 0 || k > n) return {};

  std::vector<std::pair<ElementMask, int>> caps;
  for (const auto& interval : all_cyclic_intervals(n)) {
    const int r = rank_from_family(family, interval);
    if (r < interval.len()) caps.emplace_back(interval.mask(), r);
  }

  std::vector<ElementMask> out;
  // selector[i] marks element i+1; prev_permutation from 1..10..0 walks the
  // k-subsets in lexicographic order.
  std::vector<bool> selector(n, false);
  std::fill(selector.begin(), selector.begin() + k, true);
  do {
    ElementMask b = 0;
    for (int i = 0; i < n; ++i) {
      if (selector[i]) b |= ElementMask{1} << i;
    }
    const bool ok = std::all_of(caps.begin(), caps.end(), [b](const auto& cap) {
      return popcount(b & cap.first) <= cap.second;
    });
    if (ok) out.push_back(b);
  } while (std::prev_permutation(selector.begin(), selector.end()));
  return out;
}

std::vector<int> mask_elements(ElementMask mask) {
  std::vector<int> out;
  for (int i = 0; i < kMaxGroundSet; ++i) {
    if (mask & (ElementMask{1} << i)) out.push_back(i + 1);
  }
  return out;
}

std::vector<RankedInterval> variety_conditions(const RankedEssentialFamily& family) {
  std::vector<RankedInterval> out;
  for (const auto& e : connected_entries(family)) {
    if (!e.interval.is_full()) out.push_back(e);
  }
  return out;
}

std::vector<BoundedAffinePermutation> codim1_boundaries(const BoundedAffinePermutation& p,
                                                        int bound) {
  const int n = p.n();
  if (n > bound) throw TooLargeError("codim1_boundary_count", n, bound);
  const auto intervals = all_cyclic_intervals(n);
  std::vector<int> caps;
  caps.reserve(intervals.size());
  for (const auto& interval : intervals) caps.push_back(rank_interval(p, interval));
  const int target = length(p) + 1;

  std::vector<BoundedAffinePermutation> out;
  for_each_bounded_affine_permutation(n, rank(p), [&](const BoundedAffinePermutation& q) {
    if (length(q) != target) return true;
    for (std::size_t t = 0; t < intervals.size(); ++t) {
      if (rank_interval(q, intervals[t]) > caps[t]) return true;
    }
    out.push_back(q);
    return true;
  });
  return out;
}

int codim1_boundary_count(const BoundedAffinePermutation& p, int bound) {
  return static_cast<int>(codim1_boundaries(p, bound).size());
}

}  // namespace positroid
