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

// Enumeration and sampling of bounded affine permutations of a given size.

#ifndef POSITROID_ENUMERATE_HPP_
#define POSITROID_ENUMERATE_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "positroid/core.hpp"

namespace positroid {

// Calls visit on every bounded affine permutation of size n (of rank k when
// given), in lexicographic order of windows. Returning false from visit
// stops the enumeration.
void for_each_bounded_affine_permutation(
    int n, std::optional<int> k,
    const std::function<bool(const BoundedAffinePermutation&)>& visit);

// Same, restricted to windows with pi(1) = first_value. Shards of the full
// enumeration, in order, for first_value = 1, ..., n + 1.
void for_each_bounded_affine_permutation_from(
    int n, std::optional<int> k, int first_value,
    const std::function<bool(const BoundedAffinePermutation&)>& visit);

std::vector<BoundedAffinePermutation> all_bounded_affine_permutations(
    int n, std::optional<int> k = std::nullopt);

// Uniformly random permutation of the residues; fixed points become loops or
// coloops with probability 1/2 each.
BoundedAffinePermutation random_bounded_affine_permutation(int n, std::mt19937_64& rng);

}  // namespace positroid

#endif  // POSITROID_ENUMERATE_HPP_
