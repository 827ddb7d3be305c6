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

// Python bindings. Ranked intervals cross the boundary as (rank, start, len)
// tuples and element sets as sorted tuples of 1-based elements.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "positroid/diagram.hpp"
#include "positroid/enumerate.hpp"
#include "positroid/essential.hpp"
#include "positroid/geometry.hpp"
#include "positroid/realize.hpp"
#include "positroid/retrieval.hpp"
#include "positroid/smallrank.hpp"

namespace py = pybind11;
using namespace positroid;

namespace {

using Entry = std::tuple<int, int, int>;

Entry entry_tuple(const RankedInterval& e) { return {e.rank, e.interval.start(), e.interval.len()}; }

std::vector<Entry> entry_tuples(const std::vector<RankedInterval>& entries) {
  std::vector<Entry> out;
  for (const auto& e : entries) out.push_back(entry_tuple(e));
  return out;
}

std::vector<RankedInterval> entries_from(int n, const std::vector<Entry>& tuples) {
  std::vector<RankedInterval> out;
  for (const auto& [r, start, len] : tuples) out.push_back({r, CyclicInterval(n, start, len)});
  return out;
}

RankedEssentialFamily make_family(int n, int k, const std::vector<Entry>& entries) {
  return RankedEssentialFamily::with_full_entry(n, k, entries_from(n, entries));
}

py::dict facet_dict(const FacetSystem& system) {
  py::list rows;
  for (const auto& q : system.inequalities) rows.append(py::make_tuple(q.interval.start(), q.interval.len(), q.rhs));
  py::dict out;
  out["n"] = system.n;
  out["k"] = system.k;
  out["inequalities"] = rows;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Positroids through ranked essential families of cyclic intervals";

  static py::exception<Error> error(m, "PositroidError", PyExc_ValueError);
  static py::exception<NotValidatedError> not_validated(m, "NotValidatedError", error.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const NotValidatedError& e) {
      PyErr_SetString(not_validated.ptr(), e.what());
    } catch (const Error& e) {
      PyErr_SetString(error.ptr(), e.what());
    }
  });

  py::class_<BoundedAffinePermutation>(m, "Permutation")
      .def(py::init([](const std::vector<int>& window) { return BoundedAffinePermutation::from_window(window); }),
           py::arg("window"))
      .def_static("uniform", &BoundedAffinePermutation::uniform, py::arg("k"), py::arg("n"))
      .def_static("identity", &BoundedAffinePermutation::identity, py::arg("n"))
      .def_property_readonly("n", &BoundedAffinePermutation::n)
      .def_property_readonly("window", &BoundedAffinePermutation::window)
      .def_property_readonly("k", [](const BoundedAffinePermutation& p) { return rank(p); })
      .def("__call__", &BoundedAffinePermutation::eval, py::arg("i"))
      .def("inverse_at", &BoundedAffinePermutation::inverse_at, py::arg("j"))
      .def("loops", [](const BoundedAffinePermutation& p) { return loops(p); })
      .def("coloops", [](const BoundedAffinePermutation& p) { return coloops(p); })
      .def("__eq__", [](const BoundedAffinePermutation& a, const BoundedAffinePermutation& b) { return a == b; })
      .def("__hash__", [](const BoundedAffinePermutation& p) { return py::hash(py::tuple(py::cast(p.window()))); })
      .def("__repr__", [](const BoundedAffinePermutation& p) { return "Permutation" + p.to_string(); })
      .def("__str__", &BoundedAffinePermutation::to_string);

  py::class_<RankedEssentialFamily>(m, "Family")
      .def(py::init(&make_family), py::arg("n"), py::arg("k"), py::arg("entries"),
           "Entries are (rank, start, len); (k, 1, n) is added when absent.")
      .def_property_readonly("n", &RankedEssentialFamily::n)
      .def_property_readonly("k", &RankedEssentialFamily::k)
      .def_property_readonly("entries", [](const RankedEssentialFamily& f) { return entry_tuples(f.entries()); })
      .def("__len__", &RankedEssentialFamily::size)
      .def("__eq__", [](const RankedEssentialFamily& a, const RankedEssentialFamily& b) { return a == b; })
      .def("__repr__", &RankedEssentialFamily::to_string);

  m.def("rank_interval",
        [](const BoundedAffinePermutation& p, int start, int len) {
          return rank_interval(p, CyclicInterval(p.n(), start, len));
        },
        py::arg("perm"), py::arg("start"), py::arg("len"));
  m.def("essential_family", &ranked_essential_family, py::arg("perm"));
  m.def("render_diagram", &render_diagram, py::arg("perm"));
  m.def("corners",
        [](const BoundedAffinePermutation& p) {
          std::vector<std::pair<int, int>> out;
          for (const auto& sq : corners(p)) out.emplace_back(sq.row, sq.col);
          return out;
        },
        py::arg("perm"));

  m.def("rank_from_family",
        [](const RankedEssentialFamily& f, int start, int len) {
          return rank_from_family(f, CyclicInterval(f.n(), start, len));
        },
        py::arg("family"), py::arg("start"), py::arg("len"));
  m.def("connected_entries", [](const RankedEssentialFamily& f) { return entry_tuples(connected_entries(f)); },
        py::arg("family"));
  m.def("core", [](const RankedEssentialFamily& f) { return entry_tuples(core(f)); }, py::arg("family"));
  m.def("excess",
        [](const RankedEssentialFamily& f) {
          const auto table = excess(f);
          std::vector<std::pair<Entry, int>> out;
          for (std::size_t i = 0; i < table.entries.size(); ++i) {
            out.emplace_back(entry_tuple(table.entries[i]), table.excess[i]);
          }
          return out;
        },
        py::arg("family"));
  m.def("validate",
        [](const RankedEssentialFamily& f) {
          std::vector<std::pair<std::string, std::string>> out;
          for (const auto& v : validate_chess(f).violations) out.emplace_back(rule_name(v.rule), v.message);
          return out;
        },
        py::arg("family"), "Chess-axiom violations as (rule, message); empty when valid.");
  m.def("permutation_from_family", &permutation_from_family, py::arg("family"));

  m.def("retrieve",
        [](int n, const std::vector<Entry>& conditions, bool trace) {
          const auto result = retrieve(RankConditionSet::from_intervals(n, entries_from(n, conditions)), trace);
          py::dict out;
          out["permutation"] = result.permutation ? py::cast(*result.permutation) : py::none();
          out["error"] = result.failure ? py::cast(error_name(result.failure->kind)) : py::none();
          out["detail"] = result.failure ? py::cast(result.failure->detail) : py::none();
          py::list events;
          for (const auto& e : result.trace) events.append(e.to_json());
          out["trace"] = events;
          return out;
        },
        py::arg("n"), py::arg("conditions"), py::arg("trace") = false,
        "Conditions are (rank, start, len). Returns a dict with the permutation or the error kind.");

  m.def("length", &length, py::arg("perm"));
  m.def("codim_from_family", &codim_from_family, py::arg("family"));
  m.def("facet_system", [](const RankedEssentialFamily& f) { return facet_dict(facet_system(f)); }, py::arg("family"));
  m.def("h_representation", [](const RankedEssentialFamily& f) { return facet_system(f).to_h_representation(); },
        py::arg("family"));
  m.def("bases",
        [](const RankedEssentialFamily& f, int bound) {
          std::vector<std::vector<int>> out;
          for (auto mask : bases(f, bound)) out.push_back(mask_elements(mask));
          return out;
        },
        py::arg("family"), py::arg("bound") = kDefaultBasisBound);
  m.def("codim1_boundaries", &codim1_boundaries, py::arg("perm"), py::arg("bound") = kDefaultBoundaryBound);

  m.def("deficient_flats",
        [](const RankedEssentialFamily& f) {
          std::vector<std::pair<int, std::vector<int>>> out;
          for (const auto& flat : deficient_flats(f).entries) out.emplace_back(flat.rank, mask_elements(flat.set));
          return out;
        },
        py::arg("family"));
  m.def("is_positroid_rank2",
        [](int n, const std::vector<std::vector<int>>& classes, const std::vector<int>& loops) {
          return is_positroid_rank2(Rank2Matroid{n, classes, loops});
        },
        py::arg("n"), py::arg("classes"), py::arg("loops") = std::vector<int>{});

  m.def("permutation_from_matrix",
        [](const std::vector<std::vector<std::string>>& rows, bool check_nonnegative) {
          const int k = static_cast<int>(rows.size());
          const int n = k == 0 ? 0 : static_cast<int>(rows.front().size());
          return permutation_from_matrix(RationalMatrix::parse(k, n, rows), check_nonnegative);
        },
        py::arg("rows"), py::arg("check_nonnegative") = true,
        "Rows of rational entries written as strings, e.g. '3', '-1/2', '0.25'.");
  m.def("is_positively_realizing",
        [](const std::vector<std::vector<std::string>>& rows) {
          const int k = static_cast<int>(rows.size());
          const int n = k == 0 ? 0 : static_cast<int>(rows.front().size());
          return is_positively_realizing(RationalMatrix::parse(k, n, rows));
        },
        py::arg("rows"));

  m.def("enumerate", &all_bounded_affine_permutations, py::arg("n"), py::arg("k") = std::nullopt);
}
