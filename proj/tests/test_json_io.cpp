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

#include "doctest.h"
#include "positroid/diagram.hpp"
#include "positroid/json_io.hpp"

using namespace positroid;

TEST_CASE("permutation JSON") {
  const auto p = permutation_from_json(parse_json(R"({"n": 8, "window": [3,4,8,7,6,9,10,13]})"));
  CHECK(p.to_string() == "(3 4 8 7 6 9 10 13)");
  CHECK(to_json(p).dump() == R"({"n":8,"window":[3,4,8,7,6,9,10,13]})");
  CHECK(permutation_from_json(parse_json(R"({"window":[2,3]})")).n() == 2);
  CHECK_THROWS_AS(permutation_from_json(parse_json(R"({"n": 3, "window": [1,2]})")), JsonError);
  CHECK_THROWS_AS(permutation_from_json(parse_json(R"({"window": [3,3,6]})")), JsonError);
  CHECK_THROWS_AS(permutation_from_json(parse_json(R"({"window": "123"})")), JsonError);
  CHECK_THROWS_AS(parse_json("{"), JsonError);
  CHECK(is_permutation_json(parse_json(R"({"window":[1]})")));
  CHECK_FALSE(is_permutation_json(parse_json(R"({"n":1,"k":0,"sets":[]})")));
}

TEST_CASE("interval and family JSON") {
  CHECK(to_json(CyclicInterval(8, 4, 4)).dump() == R"({"start":4,"len":4})");
  CHECK(interval_from_json(8, parse_json(R"({"start":7,"len":3})")) == CyclicInterval(8, 7, 3));
  CHECK_THROWS_AS(interval_from_json(8, parse_json(R"({"start":9,"len":3})")), JsonError);

  const auto F = family_from_json(parse_json(
      R"({"n":8,"k":3,"sets":[{"rank":2,"start":4,"len":4},{"rank":1,"start":5,"len":2},{"rank":2,"start":1,"len":4}]})"));
  CHECK(F == ranked_essential_family(BoundedAffinePermutation::from_window(std::vector<int>{3, 4, 8, 7, 6, 9, 10, 13})));
  CHECK(to_json(F).dump() ==
        R"({"n":8,"k":3,"sets":[{"rank":2,"start":1,"len":4},{"rank":3,"start":1,"len":8},)"
        R"({"rank":2,"start":4,"len":4},{"rank":1,"start":5,"len":2}]})");
  CHECK(family_from_json(to_json(F)) == F);
  CHECK_THROWS_AS(family_from_json(parse_json(R"({"n":8,"sets":[]})")), JsonError);
  CHECK_THROWS_AS(family_from_json(parse_json(
                      R"({"n":4,"k":1,"sets":[{"rank":1,"start":1,"len":2},{"rank":0,"start":1,"len":2}]})")),
                  JsonError);
}

TEST_CASE("conditions JSON") {
  const auto C = conditions_from_json(parse_json(
      R"({"n":5,"conditions":[{"rank":1,"start":3,"len":2},{"rank":3,"start":1,"len":5}]})"));
  REQUIRE(C.conditions().size() == 2);
  CHECK(C.conditions()[0] == RankCondition{1, {3, 2}});
  CHECK(C.conditions()[1] == RankCondition{3, {1, 5}});
}

TEST_CASE("matrix JSON") {
  const auto M = matrix_from_json(parse_json(R"({"k":2,"n":3,"entries":[["1","1/2",0],["0","1","-0.5"]]})"));
  CHECK(M.at(0, 1) == mpq_class(1, 2));
  CHECK(M.at(1, 2) == mpq_class(-1, 2));
  CHECK_THROWS_AS(matrix_from_json(parse_json(R"({"k":2,"n":3,"entries":[["1","1","1"]]})")), JsonError);
  CHECK_THROWS_AS(matrix_from_json(parse_json(R"({"k":1,"n":2,"entries":[["1","x"]]})")), JsonError);
  CHECK_THROWS_AS(matrix_from_json(parse_json(R"({"k":1,"n":2,"entries":[[1.5,1]]})")), JsonError);
}

TEST_CASE("rank-2 JSON") {
  const auto m = rank2_from_json(parse_json(R"({"n":5,"classes":[[1,2],[3],[4,5]]})"));
  CHECK(m.n == 5);
  CHECK(m.classes.size() == 3);
  CHECK(m.loops.empty());
  CHECK(rank2_from_json(parse_json(R"({"n":3,"classes":[[1],[2]],"loops":[3]})")).loops == std::vector<int>{3});
}

TEST_CASE("facet system JSON") {
  const auto F = ranked_essential_family(BoundedAffinePermutation::from_window(std::vector<int>{3, 4, 8, 7, 6, 9, 10, 13}));
  const auto j = to_json(facet_system(F));
  CHECK(j["inequalities"].size() == 3);
  CHECK(j["equality"]["sum"] == 3);
}
