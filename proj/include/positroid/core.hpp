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

// Ground-set arithmetic on [n] = {1, ..., n}: cyclic intervals, the cyclic
// orders <_i, bounded affine permutations and their rank function on cyclic
// intervals.
//
// Integers outside [1, n] are "lifts"; the element they denote is their
// residue mod n, taken in [1, n]. All rank computations run on lifts.

#ifndef POSITROID_CORE_HPP_
#define POSITROID_CORE_HPP_

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace positroid {

// Ground sets are limited so that subsets of [n] fit a 64-bit mask.
inline constexpr int kMaxGroundSet = 64;

using ElementMask = std::uint64_t;

// Representative of x in [1, n].
int residue(int x, int n);

// Mask of the single element x (any lift).
ElementMask element_bit(int x, int n);

int popcount(ElementMask m);

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The cyclic interval [start, start + len - 1] of [n], stored as
// (start, len). The full interval is always stored with start 1.
class CyclicInterval {
 public:
  CyclicInterval(int n, int start, int len);

  static CyclicInterval full(int n) { return CyclicInterval(n, 1, n); }
  // Interval between two lifts first <= last, last - first < n.
  static CyclicInterval from_lifts(int n, int first, int last);

  int n() const { return n_; }
  int start() const { return start_; }
  int len() const { return len_; }
  // Lift of the last element, start() + len() - 1.
  int last() const { return start_ + len_ - 1; }
  // Last element reduced to [1, n].
  int end() const { return residue(last(), n_); }
  bool is_full() const { return len_ == n_; }

  bool contains(int x) const;
  ElementMask mask() const;
  std::vector<int> elements() const;

  bool is_subset_of(const CyclicInterval& other) const {
    return (mask() & ~other.mask()) == 0;
  }
  bool is_disjoint_from(const CyclicInterval& other) const {
    return (mask() & other.mask()) == 0;
  }

  // "[5,6]" with endpoints in [1, n].
  std::string to_string() const;

  friend bool operator==(const CyclicInterval&, const CyclicInterval&) = default;
  friend auto operator<=>(const CyclicInterval& a, const CyclicInterval& b) {
    if (auto c = a.start_ <=> b.start_; c != 0) return c;
    if (auto c = a.len_ <=> b.len_; c != 0) return c;
    return a.n_ <=> b.n_;
  }

 private:
  int n_;
  int start_;
  int len_;
};

// The order <_base on [n]: base < base+1 < ... < n < 1 < ... < base-1,
// extended to all integers through residues.
class CyclicOrder {
 public:
  CyclicOrder(int n, int base);

  // Position of x in the order, in [0, n).
  int position(int x) const;
  bool less(int a, int b) const { return position(a) < position(b); }
  bool less_equal(int a, int b) const { return position(a) <= position(b); }

  int n() const { return n_; }
  int base() const { return base_; }

 private:
  int n_;
  int base_;
};

// Raised by BoundedAffinePermutation::from_window.
class PermutationError : public Error {
 public:
  enum class Kind { kEmpty, kTooLarge, kBoundViolation, kNotBijective };

  PermutationError(Kind kind, int first, int second, const std::string& what)
      : Error(what), kind_(kind), first_(first), second_(second) {}

  Kind kind() const { return kind_; }
  // For kBoundViolation the offending position; for kNotBijective the two
  // colliding positions (1-based).
  int first() const { return first_; }
  int second() const { return second_; }

 private:
  Kind kind_;
  int first_;
  int second_;
};

// A bijection pi of the integers with pi(i + n) = pi(i) + n and
// i <= pi(i) <= i + n, stored through its window pi(1), ..., pi(n).
class BoundedAffinePermutation {
 public:
  // Validates bounds and bijectivity; throws PermutationError.
  static BoundedAffinePermutation from_window(std::span<const int> window);
  static BoundedAffinePermutation from_window(const std::vector<int>& window) {
    return from_window(std::span<const int>(window));
  }
  // pi(i) = i + k.
  static BoundedAffinePermutation uniform(int k, int n);
  static BoundedAffinePermutation identity(int n) { return uniform(0, n); }

  int n() const { return static_cast<int>(window_.size()); }
  const std::vector<int>& window() const { return window_; }

  int eval(int i) const;
  int inverse_at(int j) const;

  friend bool operator==(const BoundedAffinePermutation&,
                         const BoundedAffinePermutation&) = default;
  friend auto operator<=>(const BoundedAffinePermutation& a,
                          const BoundedAffinePermutation& b) {
    return a.window_ <=> b.window_;
  }

  std::string to_string() const;

 private:
  BoundedAffinePermutation(std::vector<int> window, std::vector<int> inverse)
      : window_(std::move(window)), inverse_(std::move(inverse)) {}

  std::vector<int> window_;
  // inverse_[s - 1] is the position p in [1, n] with pi(p) = s (mod n).
  std::vector<int> inverse_;
};

// |{l in I : pi(l) > last(I)}|, counted on lifts.
int rank_interval(const BoundedAffinePermutation& p, const CyclicInterval& interval);

// Number of i in [1, n] with pi(i) > n.
int rank(const BoundedAffinePermutation& p);

std::vector<int> loops(const BoundedAffinePermutation& p);
std::vector<int> coloops(const BoundedAffinePermutation& p);

// Every cyclic interval of [n]: the n(n-1) proper ones ordered by
// (start, len), followed by the full interval.
std::vector<CyclicInterval> all_cyclic_intervals(int n);

}  // namespace positroid

#endif  // POSITROID_CORE_HPP_
