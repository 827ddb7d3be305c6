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

#include "positroid/json_io.hpp"

namespace positroid {
namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw JsonError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw JsonError(std::string("missing field \"") + key + "\"");
  return *it;
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) throw JsonError(std::string("field \"") + key + "\" must be an integer");
  return v.get<int>();
}

const Json& array_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_array()) throw JsonError(std::string("field \"") + key + "\" must be an array");
  return v;
}

std::vector<int> int_list(const Json& v, const char* what) {
  if (!v.is_array()) throw JsonError(std::string(what) + " must be an array");
  std::vector<int> out;
  for (const auto& x : v) {
    if (!x.is_number_integer()) throw JsonError(std::string(what) + " must hold integers");
    out.push_back(x.get<int>());
  }
  return out;
}

// Library errors raised while building a value from JSON are input errors.
template <typename F>
auto wrap(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const JsonError&) {
    throw;
  } catch (const Error& e) {
    throw JsonError(e.what());
  }
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw JsonError(std::string("invalid JSON: ") + e.what());
  }
}

Json to_json(const BoundedAffinePermutation& p) {
  return Json{{"n", p.n()}, {"window", p.window()}};
}

Json to_json(const CyclicInterval& interval) {
  return Json{{"start", interval.start()}, {"len", interval.len()}};
}

Json to_json(const RankedInterval& entry) {
  return Json{{"rank", entry.rank}, {"start", entry.interval.start()}, {"len", entry.interval.len()}};
}

Json to_json(const RankedEssentialFamily& family) {
  Json sets = Json::array();
  for (const auto& e : family.entries()) sets.push_back(to_json(e));
  return Json{{"n", family.n()}, {"k", family.k()}, {"sets", std::move(sets)}};
}

Json to_json(const FacetSystem& system) {
  Json rows = Json::array();
  for (const auto& q : system.inequalities) {
    rows.push_back(Json{{"start", q.interval.start()}, {"len", q.interval.len()}, {"rhs", q.rhs}});
  }
  return Json{{"n", system.n},
              {"k", system.k},
              {"bounds", Json{{"lower", 0}, {"upper", 1}}},
              {"equality", Json{{"sum", system.k}}},
              {"inequalities", std::move(rows)}};
}

Json to_json(const DeficientFlatFamily& flats) {
  Json out = Json::array();
  for (const auto& f : flats.entries) {
    out.push_back(Json{{"rank", f.rank}, {"set", mask_elements(f.set)}});
  }
  return Json{{"n", flats.n}, {"flats", std::move(out)}};
}

bool is_permutation_json(const Json& j) { return j.is_object() && j.contains("window"); }

BoundedAffinePermutation permutation_from_json(const Json& j) {
  auto window = int_list(field(j, "window"), "\"window\"");
  if (j.contains("n") && int_field(j, "n") != static_cast<int>(window.size())) {
    throw JsonError("\"n\" does not match the window length");
  }
  return wrap([&] { return BoundedAffinePermutation::from_window(window); });
}

CyclicInterval interval_from_json(int n, const Json& j) {
  const int start = int_field(j, "start");
  const int len = int_field(j, "len");
  return wrap([&] { return CyclicInterval(n, start, len); });
}

RankedEssentialFamily family_from_json(const Json& j) {
  const int n = int_field(j, "n");
  const int k = int_field(j, "k");
  std::vector<RankedInterval> entries;
  for (const auto& s : array_field(j, "sets")) {
    entries.push_back({int_field(s, "rank"), interval_from_json(n, s)});
  }
  return wrap([&] { return RankedEssentialFamily::with_full_entry(n, k, std::move(entries)); });
}

RankConditionSet conditions_from_json(const Json& j) {
  const int n = int_field(j, "n");
  std::vector<RankedInterval> entries;
  for (const auto& c : array_field(j, "conditions")) {
    entries.push_back({int_field(c, "rank"), interval_from_json(n, c)});
  }
  return wrap([&] { return RankConditionSet::from_intervals(n, entries); });
}

RationalMatrix matrix_from_json(const Json& j) {
  const int k = int_field(j, "k");
  const int n = int_field(j, "n");
  std::vector<std::vector<std::string>> rows;
  for (const auto& row : array_field(j, "entries")) {
    if (!row.is_array()) throw JsonError("matrix rows must be arrays");
    std::vector<std::string> r;
    for (const auto& e : row) {
      if (e.is_string()) {
        r.push_back(e.get<std::string>());
      } else if (e.is_number_integer()) {
        r.push_back(std::to_string(e.get<long long>()));
      } else {
        throw JsonError("matrix entries must be strings or integers");
      }
    }
    rows.push_back(std::move(r));
  }
  return wrap([&] { return RationalMatrix::parse(k, n, rows); });
}

Rank2Matroid rank2_from_json(const Json& j) {
  Rank2Matroid m{int_field(j, "n"), {}, {}};
  for (const auto& c : array_field(j, "classes")) m.classes.push_back(int_list(c, "a class"));
  if (j.contains("loops")) m.loops = int_list(j["loops"], "\"loops\"");
  return m;
}

}  // namespace positroid
