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

#include "positroid/enumerate.hpp"

#include <algorithm>
#include <numeric>

namespace positroid {
namespace {

class Enumerator {
 public:
  Enumerator(int n, std::optional<int> k,
             const std::function<bool(const BoundedAffinePermutation&)>& visit)
      : n_(n), k_(k), visit_(visit), window_(n), used_(n, false) {}

  // Returns false once the visitor asked to stop.
  bool extend(int i, int coloops) {
    if (i > n_) {
      if (k_ && coloops != *k_) return true;
      return visit_(BoundedAffinePermutation::from_window(window_));
    }
    for (int v = i; v <= i + n_; ++v) {
      if (!place(i, v, coloops)) return false;
    }
    return true;
  }

  bool place(int i, int v, int coloops) {
    const int slot = residue(v, n_) - 1;
    if (used_[slot]) return true;
    const int above = v > n_ ? 1 : 0;
    if (k_ && coloops + above > *k_) return true;
    used_[slot] = true;
    window_[i - 1] = v;
    const bool keep_going = extend(i + 1, coloops + above);
    used_[slot] = false;
    return keep_going;
  }

 private:
  int n_;
  std::optional<int> k_;
  const std::function<bool(const BoundedAffinePermutation&)>& visit_;
  std::vector<int> window_;
  std::vector<bool> used_;
};

}  // namespace

void for_each_bounded_affine_permutation(
    int n, std::optional<int> k,
    const std::function<bool(const BoundedAffinePermutation&)>& visit) {
  if (n < 1 || n > kMaxGroundSet) throw Error("enumerate: n out of range");
  Enumerator(n, k, visit).extend(1, 0);
}

void for_each_bounded_affine_permutation_from(
    int n, std::optional<int> k, int first_value,
    const std::function<bool(const BoundedAffinePermutation&)>& visit) {
  if (n < 1 || n > kMaxGroundSet) throw Error("enumerate: n out of range");
  if (first_value < 1 || first_value > n + 1) return;
  Enumerator(n, k, visit).place(1, first_value, 0);
}

std::vector<BoundedAffinePermutation> all_bounded_affine_permutations(int n,
                                                                      std::optional<int> k) {
  std::vector<BoundedAffinePermutation> out;
  for_each_bounded_affine_permutation(n, k, [&out](const BoundedAffinePermutation& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

BoundedAffinePermutation random_bounded_affine_permutation(int n, std::mt19937_64& rng) {
  // sigma(i) is the residue of pi(i); pi(i) is its lift in (i, i+n], or i
  // itself for a loop.
  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 1);
  std::shuffle(sigma.begin(), sigma.end(), rng);
  std::bernoulli_distribution coin(0.5);
  std::vector<int> window(n);
  for (int i = 1; i <= n; ++i) {
    const int s = sigma[i - 1];
    if (s == i) {
      window[i - 1] = coin(rng) ? i + n : i;
    } else {
      window[i - 1] = s > i ? s : s + n;
    }
  }
  return BoundedAffinePermutation::from_window(window);
}

}  // namespace positroid
