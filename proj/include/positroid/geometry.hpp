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

// Geometric quantities of a positroid: the codimension of its cell (from the
// permutation and from the ranked essential family), the facet description
// of its matroid polytope, its bases, the rank conditions cutting out its
// variety, and a desk-scale count of codimension-one boundary cells.

#ifndef POSITROID_GEOMETRY_HPP_
#define POSITROID_GEOMETRY_HPP_

#include <string>
#include <vector>

#include "positroid/core.hpp"
#include "positroid/family.hpp"

namespace positroid {

class TooLargeError : public Error {
 public:
  TooLargeError(const std::string& what, int n, int bound)
      : Error(what + ": n = " + std::to_string(n) + " exceeds bound " + std::to_string(bound)),
        n_(n),
        bound_(bound) {}
  int n() const { return n_; }
  int bound() const { return bound_; }

 private:
  int n_;
  int bound_;
};

// Number of (i, j) with i in [1, n], i < j <= i + n and pi(i) > pi(j).
int length(const BoundedAffinePermutation& p);

// sum over entries of (k - r) e_I.
int codim_from_family(const RankedEssentialFamily& family);

// sum x_l over an interval <= rank.
struct IntervalInequality {
  CyclicInterval interval;
  int rhs;
};

// 0 <= x_i <= 1, sum x_i = k, and one inequality per connected proper entry.
struct FacetSystem {
  int n;
  int k;
  std::vector<IntervalInequality> inequalities;

  bool contains(const std::vector<int>& point) const;
  // One row per constraint: coefficients, relation, right-hand side.
  std::string to_h_representation() const;
};

FacetSystem facet_system(const RankedEssentialFamily& family);

inline constexpr int kDefaultBasisBound = 16;
inline constexpr int kDefaultBoundaryBound = 9;

// k-subsets B with |B & I| <= rank(I) for every cyclic interval I, as bit
// masks (bit e-1 for element e) in increasing lexicographic order of their
// sorted element lists. Throws TooLargeError when n > bound.
std::vector<ElementMask> bases(const RankedEssentialFamily& family,
                               int bound = kDefaultBasisBound);

std::vector<int> mask_elements(ElementMask mask);

// Rank conditions rank(I) <= r for the connected proper entries.
std::vector<RankedInterval> variety_conditions(const RankedEssentialFamily& family);

// Number of q with rank(q) = rank(p), length(q) = length(p) + 1 and
// rank_q(I) <= rank_p(I) on every cyclic interval. Experimental: cyclic
// interval rank dominance stands in for the closure order on cells.
int codim1_boundary_count(const BoundedAffinePermutation& p,
                          int bound = kDefaultBoundaryBound);

// The permutations counted by codim1_boundary_count.
std::vector<BoundedAffinePermutation> codim1_boundaries(const BoundedAffinePermutation& p,
                                                        int bound = kDefaultBoundaryBound);

}  // namespace positroid

#endif  // POSITROID_GEOMETRY_HPP_
