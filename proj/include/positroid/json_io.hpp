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

// JSON encodings shared by the command-line tool and the tests.
//   permutation  {"n": 8, "window": [3, 4, 8, 7, 6, 9, 10, 13]}
//   interval     {"start": 4, "len": 4}
//   family       {"n": 8, "k": 3, "sets": [{"rank": 1, "start": 5, "len": 2}, ...]}
//   conditions   {"n": 5, "conditions": [{"rank": 1, "start": 3, "len": 2}, ...]}
//   matrix       {"k": 3, "n": 8, "entries": [["1", "0", ...], ...]}
//   rank 2       {"n": 5, "classes": [[1, 2], [3], [4, 5]], "loops": []}
// Parsers throw JsonError on anything malformed.

#ifndef POSITROID_JSON_IO_HPP_
#define POSITROID_JSON_IO_HPP_

#include <string>

#include "json.hpp"
#include "positroid/core.hpp"
#include "positroid/family.hpp"
#include "positroid/geometry.hpp"
#include "positroid/realize.hpp"
#include "positroid/retrieval.hpp"
#include "positroid/smallrank.hpp"

namespace positroid {

using Json = nlohmann::ordered_json;

class JsonError : public Error {
 public:
  using Error::Error;
};

Json parse_json(const std::string& text);

Json to_json(const BoundedAffinePermutation& p);
Json to_json(const CyclicInterval& interval);
Json to_json(const RankedInterval& entry);
Json to_json(const RankedEssentialFamily& family);
Json to_json(const FacetSystem& system);
Json to_json(const DeficientFlatFamily& flats);

BoundedAffinePermutation permutation_from_json(const Json& j);
CyclicInterval interval_from_json(int n, const Json& j);
// The full entry is synthesized from "k" when absent.
RankedEssentialFamily family_from_json(const Json& j);
RankConditionSet conditions_from_json(const Json& j);
RationalMatrix matrix_from_json(const Json& j);
Rank2Matroid rank2_from_json(const Json& j);

// Whether the object looks like a permutation (has "window") rather than a
// family.
bool is_permutation_json(const Json& j);

}  // namespace positroid

#endif  // POSITROID_JSON_IO_HPP_
