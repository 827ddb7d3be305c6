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

#include "positroid/core.hpp"

#include <bit>
#include <sstream>

namespace positroid {

int residue(int x, int n) {
  int r = (x - 1) % n;
  if (r < 0) r += n;
  return r + 1;
}

ElementMask element_bit(int x, int n) {
  return ElementMask{1} << (residue(x, n) - 1);
}

int popcount(ElementMask m) { return std::popcount(m); }

CyclicInterval::CyclicInterval(int n, int start, int len)
    : n_(n), start_(start), len_(len) {
  if (n < 1 || n > kMaxGroundSet) {
    throw Error("cyclic interval: ground set size " + std::to_string(n) +
                " outside [1, " + std::to_string(kMaxGroundSet) + "]");
  }
  if (start < 1 || start > n) {
    throw Error("cyclic interval: start " + std::to_string(start) +
                " outside [1, " + std::to_string(n) + "]");
  }
  if (len < 1 || len > n) {
    throw Error("cyclic interval: length " + std::to_string(len) +
                " outside [1, " + std::to_string(n) + "]");
  }
  if (len == n) start_ = 1;
}

CyclicInterval CyclicInterval::from_lifts(int n, int first, int last) {
  return CyclicInterval(n, residue(first, n), last - first + 1);
}

bool CyclicInterval::contains(int x) const {
  int offset = residue(x - start_ + 1, n_) - 1;
  return offset < len_;
}

ElementMask CyclicInterval::mask() const {
  ElementMask m = 0;
  for (int t = 0; t < len_; ++t) m |= element_bit(start_ + t, n_);
  return m;
}

std::vector<int> CyclicInterval::elements() const {
  std::vector<int> out;
  out.reserve(len_);
  for (int t = 0; t < len_; ++t) out.push_back(residue(start_ + t, n_));
  return out;
}

std::string CyclicInterval::to_string() const {
  return "[" + std::to_string(start_) + "," + std::to_string(end()) + "]";
}

CyclicOrder::CyclicOrder(int n, int base) : n_(n), base_(residue(base, n)) {}

int CyclicOrder::position(int x) const { return residue(x - base_ + 1, n_) - 1; }

BoundedAffinePermutation BoundedAffinePermutation::from_window(
    std::span<const int> window) {
  const int n = static_cast<int>(window.size());
  if (n == 0) {
    throw PermutationError(PermutationError::Kind::kEmpty, 0, 0,
                           "bounded affine permutation: empty window");
  }
  if (n > kMaxGroundSet) {
    throw PermutationError(PermutationError::Kind::kTooLarge, n, 0,
                           "bounded affine permutation: size " +
                               std::to_string(n) + " exceeds " +
                               std::to_string(kMaxGroundSet));
  }
  std::vector<int> inverse(n, 0);
  for (int i = 1; i <= n; ++i) {
    const int v = window[i - 1];
    if (v < i || v > i + n) {
      throw PermutationError(
          PermutationError::Kind::kBoundViolation, i, 0,
          "bounded affine permutation: pi(" + std::to_string(i) + ") = " +
              std::to_string(v) + " outside [" + std::to_string(i) + ", " +
              std::to_string(i + n) + "]");
    }
    int& slot = inverse[residue(v, n) - 1];
    if (slot != 0) {
      throw PermutationError(
          PermutationError::Kind::kNotBijective, slot, i,
          "bounded affine permutation: pi(" + std::to_string(slot) +
              ") and pi(" + std::to_string(i) + ") agree mod " +
              std::to_string(n));
    }
    slot = i;
  }
  return BoundedAffinePermutation(std::vector<int>(window.begin(), window.end()),
                                  std::move(inverse));
}

BoundedAffinePermutation BoundedAffinePermutation::uniform(int k, int n) {
  std::vector<int> w(n);
  for (int i = 1; i <= n; ++i) w[i - 1] = i + k;
  return from_window(w);
}

int BoundedAffinePermutation::eval(int i) const {
  const int n = this->n();
  const int r = residue(i, n);
  return window_[r - 1] + (i - r);
}

int BoundedAffinePermutation::inverse_at(int j) const {
  const int n = this->n();
  const int p = inverse_[residue(j, n) - 1];
  // pi(p + t n) = window[p] + t n = j.
  return p + (j - window_[p - 1]);
}

std::string BoundedAffinePermutation::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < window_.size(); ++i) {
    if (i) os << ' ';
    os << window_[i];
  }
  os << ')';
  return os.str();
}

int rank_interval(const BoundedAffinePermutation& p, const CyclicInterval& interval) {
  if (interval.n() != p.n()) {
    throw Error("rank_interval: interval over [" + std::to_string(interval.n()) +
                "] used with a permutation of size " + std::to_string(p.n()));
  }
  const int last = interval.last();
  int count = 0;
  for (int l = interval.start(); l <= last; ++l) {
    if (p.eval(l) > last) ++count;
  }
  return count;
}

int rank(const BoundedAffinePermutation& p) {
  int k = 0;
  for (int v : p.window()) {
    if (v > p.n()) ++k;
  }
  return k;
}

std::vector<int> loops(const BoundedAffinePermutation& p) {
  std::vector<int> out;
  for (int i = 1; i <= p.n(); ++i) {
    if (p.eval(i) == i) out.push_back(i);
  }
  return out;
}

std::vector<int> coloops(const BoundedAffinePermutation& p) {
  std::vector<int> out;
  for (int i = 1; i <= p.n(); ++i) {
    if (p.eval(i) == i + p.n()) out.push_back(i);
  }
  return out;
}

std::vector<CyclicInterval> all_cyclic_intervals(int n) {
  std::vector<CyclicInterval> out;
  out.reserve(n * (n - 1) + 1);
  for (int start = 1; start <= n; ++start) {
    for (int len = 1; len < n; ++len) out.emplace_back(n, start, len);
  }
  out.push_back(CyclicInterval::full(n));
  return out;
}

}  // namespace positroid
