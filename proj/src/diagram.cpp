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

#include "positroid/diagram.hpp"

#include <algorithm>
#include <sstream>

namespace positroid {

CyclicInterval interval_of(int n, Square sq) {
  return CyclicInterval(n, residue(sq.row, n), sq.col);
}

Square square_of(const CyclicInterval& interval) {
  return {interval.start(), interval.len()};
}

Region::Region(Kind kind, int n, Square anchor) : kind_(kind), n_(n), anchor_(anchor) {
  if (anchor.col < 1 || anchor.col > n + 1) {
    throw Error("region anchor column " + std::to_string(anchor.col) +
                " outside [1, " + std::to_string(n + 1) + "]");
  }
}

bool Region::contains(Square sq) const {
  const int t = sq.row - anchor_.row;
  const int m = anchor_.col;
  if (t < 0 || t >= m) return false;
  if (kind_ == Kind::kP) return m - t < sq.col && sq.col <= n_ + 1;
  return 1 <= sq.col && sq.col <= m - t;
}

Region region_P(int n, Square anchor) { return Region(Region::Kind::kP, n, anchor); }
Region region_T(int n, Square anchor) { return Region(Region::Kind::kT, n, anchor); }

std::vector<Square> sub_antidiagonal(int n, Square sq) {
  (void)n;
  std::vector<Square> out;
  for (int l = 1; l < sq.col; ++l) out.push_back({sq.row + l, sq.col - l});
  return out;
}

std::vector<Square> dots(const BoundedAffinePermutation& p) {
  std::vector<Square> out;
  for (int i = 1; i <= p.n(); ++i) out.push_back({i, p.eval(i) - i + 1});
  return out;
}

int count_dots(const BoundedAffinePermutation& p, const Region& region) {
  return region.count_dots([&p](int row) { return p.eval(row) - row + 1; });
}

ShadedSet::ShadedSet(const BoundedAffinePermutation& p)
    : n_(p.n()), dot_col_(p.n()), antidiag_col_(p.n()) {
  for (int i = 1; i <= n_; ++i) {
    const int col = p.eval(i) - i + 1;
    dot_col_[i - 1] = col;
    antidiag_col_[residue(i + col, n_) - 1] = col;
  }
}

bool ShadedSet::shaded(Square sq) const {
  // Left of the row's dot, or below-left of the dot on the same antidiagonal.
  return sq.col < dot_col_[residue(sq.row, n_) - 1] ||
         sq.col < antidiag_col_[residue(sq.row + sq.col, n_) - 1];
}

bool ShadedSet::is_dot(Square sq) const {
  return dot_col_[residue(sq.row, n_) - 1] == sq.col;
}

ShadedSet shaded_set(const BoundedAffinePermutation& p) { return ShadedSet(p); }

std::vector<Square> corners(const BoundedAffinePermutation& p) {
  const int n = p.n();
  std::vector<Square> out;
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j <= i + n; ++j) {
      // The cyclic comparisons are taken on lifts: pi^-1(j) in [i, j] and
      // pi^-1(j+1) < i. This stays sharp when j+1 is a loop or coloop.
      if (p.eval(i) > j) continue;
      if (p.inverse_at(j) < i) continue;
      if (p.eval(i - 1) <= j) continue;
      if (p.inverse_at(j + 1) >= i) continue;
      out.push_back({i, j - i + 1});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Square> geometric_corners(const BoundedAffinePermutation& p) {
  const int n = p.n();
  const ShadedSet shading(p);
  auto white = [&](Square sq) {
    return sq.col >= 1 && sq.col <= n + 1 && !shading.shaded(sq);
  };
  std::vector<Square> out;
  for (int row = 1; row <= n; ++row) {
    for (int col = 1; col <= n + 1; ++col) {
      if (!white({row, col})) continue;
      if (white({row - 1, col}) || white({row, col + 1}) ||
          white({row - 1, col + 1})) {
        continue;
      }
      out.push_back({row, col});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

RankedEssentialFamily ranked_essential_family(const BoundedAffinePermutation& p) {
  const int n = p.n();
  std::vector<RankedInterval> entries;
  for (Square sq : corners(p)) {
    // A corner spanning the whole ground set coincides with the full entry.
    if (sq.col >= n) continue;
    entries.push_back({count_dots(p, region_P(n, sq)), interval_of(n, sq)});
  }
  entries.push_back({rank(p), CyclicInterval::full(n)});
  return RankedEssentialFamily(n, rank(p), std::move(entries));
}

std::string render_diagram(const BoundedAffinePermutation& p) {
  const int n = p.n();
  const ShadedSet shading(p);
  const int width = static_cast<int>(std::to_string(n + 1).size());
  std::ostringstream os;
  auto pad = [&](int v) {
    std::string s = std::to_string(v);
    return std::string(width - s.size(), ' ') + s;
  };
  os << std::string(width, ' ');
  for (int col = 1; col <= n + 1; ++col) os << ' ' << pad(col);
  os << '\n';
  for (int row = 1; row <= n; ++row) {
    os << pad(row);
    for (int col = 1; col <= n + 1; ++col) {
      char c = '.';
      if (shading.is_dot({row, col})) {
        c = 'o';
      } else if (shading.shaded({row, col})) {
        c = '#';
      }
      os << ' ' << std::string(width - 1, ' ') << c;
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace positroid
