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

// The dotted n x (n+1) array of a bounded affine permutation.
//
// The array is modelled as an infinite vertical strip: rows are integer
// lifts with period n, columns run over [1, n+1]. Row i carries a dot in
// column pi(i) - i + 1. Antidiagonals are the sets {(t - c, c)}; two squares
// lie on the same antidiagonal of the periodic array when their row + col
// agree mod n.

#ifndef POSITROID_DIAGRAM_HPP_
#define POSITROID_DIAGRAM_HPP_

#include <compare>
#include <string>
#include <vector>

#include "positroid/core.hpp"
#include "positroid/family.hpp"

namespace positroid {

struct Square {
  int row;  // lift; row residue identifies periodic copies
  int col;  // in [1, n+1]

  friend bool operator==(const Square&, const Square&) = default;
  friend auto operator<=>(const Square&, const Square&) = default;
};

// Square (i, m) <-> cyclic interval [i, i+m-1], for m <= n.
CyclicInterval interval_of(int n, Square sq);
Square square_of(const CyclicInterval& interval);

// The regions attached to an anchor square (i, m):
//   P_(i,m) = {(i+t, c) : 0 <= t < m, m-t < c <= n+1}
//   T_(i,m) = {(i+t, c) : 0 <= t < m, 1 <= c <= m-t}
// T contains the anchor and its sub-antidiagonal, so T and P partition the
// row band i..i+m-1. Membership is tested on lifts.
class Region {
 public:
  enum class Kind { kP, kT };

  Region(Kind kind, int n, Square anchor);

  bool contains(Square sq) const;
  // Number of rows t in [0, m) whose dot, given by column_of_row, lies in the
  // region. column_of_row(row) returns 0 for an empty row.
  template <typename ColumnOfRow>
  int count_dots(ColumnOfRow&& column_of_row) const {
    int count = 0;
    for (int t = 0; t < anchor_.col; ++t) {
      const int c = column_of_row(anchor_.row + t);
      if (c != 0 && contains({anchor_.row + t, c})) ++count;
    }
    return count;
  }

  Kind kind() const { return kind_; }
  int n() const { return n_; }
  Square anchor() const { return anchor_; }

 private:
  Kind kind_;
  int n_;
  Square anchor_;
};

Region region_P(int n, Square anchor);
Region region_T(int n, Square anchor);

// {(i+l, j-l) : 0 < l < j}, on row lifts.
std::vector<Square> sub_antidiagonal(int n, Square sq);

// Dot positions D(pi) = {(i, pi(i)-i+1) : i in [1, n]}.
std::vector<Square> dots(const BoundedAffinePermutation& p);

// Dots of p (all periodic copies) inside the region.
int count_dots(const BoundedAffinePermutation& p, const Region& region);

// Shading of the diagram: a square is shaded when it is strictly left of the
// dot in its row, or on the sub-antidiagonal of some dot.
class ShadedSet {
 public:
  explicit ShadedSet(const BoundedAffinePermutation& p);

  bool shaded(Square sq) const;
  bool is_dot(Square sq) const;
  int n() const { return n_; }

 private:
  int n_;
  std::vector<int> dot_col_;       // by row residue
  std::vector<int> antidiag_col_;  // column of the dot on each antidiagonal residue
};

ShadedSet shaded_set(const BoundedAffinePermutation& p);

// Corners of the diagram from the arithmetic characterization: (i, j-i+1)
// is a corner iff pi(i) <= j, pi^-1(j) <=_i j, pi(i-1) > j and
// j+1 <_i pi^-1(j+1), the cyclic comparisons read on lifts. Rows are
// reported in [1, n], sorted.
std::vector<Square> corners(const BoundedAffinePermutation& p);

// Corners read off the shading: white squares with no other white square
// sharing their top-right corner. Used to cross-check corners().
std::vector<Square> geometric_corners(const BoundedAffinePermutation& p);

// Corners turned into intervals, each ranked by the dots in its P region,
// plus (k, [1, n]).
RankedEssentialFamily ranked_essential_family(const BoundedAffinePermutation& p);

// Text rendering: '.' white, '#' shaded, 'o' dot, with row and column
// headers.
std::string render_diagram(const BoundedAffinePermutation& p);

}  // namespace positroid

#endif  // POSITROID_DIAGRAM_HPP_
