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

// positroid: command line front end. Each subcommand reads one JSON document
// from a file or stdin and writes JSON (default) or text to stdout.
//
// Exit codes: 0 success, 1 malformed input, 2 retrieval rejected the
// conditions, 3 validation failure.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "positroid/diagram.hpp"
#include "positroid/enumerate.hpp"
#include "positroid/essential.hpp"
#include "positroid/geometry.hpp"
#include "positroid/json_io.hpp"
#include "positroid/realize.hpp"
#include "positroid/retrieval.hpp"
#include "positroid/smallrank.hpp"

namespace {

using namespace positroid;

constexpr int kExitMalformed = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitValidation = 3;

// A failure carrying its exit code and a diagnostic for stderr.
struct Exit {
  int code;
  std::string message;
};

struct Options {
  std::string input = "-";
  std::string format = "json";
  bool text() const { return format == "text"; }
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in) throw Exit{kExitMalformed, "cannot open " + path};
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Json load(const Options& opt) { return parse_json(read_input(opt.input)); }

void print(const Json& j) { std::cout << j.dump() << '\n'; }

Json entries_json(const std::vector<RankedInterval>& entries) {
  Json out = Json::array();
  for (const auto& e : entries) out.push_back(to_json(e));
  return out;
}

std::string entries_text(const std::vector<RankedInterval>& entries) {
  std::string out = "{";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) out += ", ";
    out += entries[i].to_string();
  }
  return out + "}";
}

// A permutation document, or a family document turned into its permutation.
struct PermOrFamily {
  std::optional<BoundedAffinePermutation> perm;
  std::optional<RankedEssentialFamily> family;
};

PermOrFamily load_perm_or_family(const Options& opt) {
  const Json j = load(opt);
  if (is_permutation_json(j)) return {permutation_from_json(j), std::nullopt};
  return {std::nullopt, family_from_json(j)};
}

RankedEssentialFamily load_family(const Options& opt) {
  const Json j = load(opt);
  if (is_permutation_json(j)) return ranked_essential_family(permutation_from_json(j));
  return family_from_json(j);
}

void require_valid(const RankedEssentialFamily& family) {
  const auto report = validate_chess(family);
  if (!report.valid()) {
    throw Exit{kExitValidation, "family violates " + rule_name(report.violations.front().rule) + ": " +
                                    report.violations.front().message};
  }
}

void run_essentials(const Options& opt, bool with_diagram, bool with_core, bool with_connected,
                    bool with_excess) {
  const auto p = permutation_from_json(load(opt));
  const auto family = ranked_essential_family(p);
  if (opt.text()) {
    std::cout << family.to_string() << '\n';
    if (with_core) std::cout << "core " << entries_text(core(family)) << '\n';
    if (with_connected) std::cout << "connected " << entries_text(connected_entries(family)) << '\n';
    if (with_excess) {
      const auto table = excess(family);
      for (std::size_t i = 0; i < table.entries.size(); ++i) {
        std::cout << "excess " << table.entries[i].to_string() << " " << table.excess[i] << '\n';
      }
    }
    if (with_diagram) std::cout << render_diagram(p);
    return;
  }
  Json out = to_json(family);
  if (with_core) out["core"] = entries_json(core(family));
  if (with_connected) out["connected"] = entries_json(connected_entries(family));
  if (with_excess) {
    const auto table = excess(family);
    Json rows = Json::array();
    for (std::size_t i = 0; i < table.entries.size(); ++i) {
      Json row = to_json(table.entries[i]);
      row["excess"] = table.excess[i];
      rows.push_back(std::move(row));
    }
    out["excess"] = std::move(rows);
  }
  if (with_diagram) out["diagram"] = render_diagram(p);
  print(out);
}

void run_diagram(const Options& opt) {
  const auto p = permutation_from_json(load(opt));
  if (opt.text()) {
    std::cout << render_diagram(p);
    return;
  }
  Json corner_list = Json::array();
  for (const auto& sq : corners(p)) corner_list.push_back(Json::array({sq.row, sq.col}));
  print(Json{{"n", p.n()}, {"corners", std::move(corner_list)}, {"render", render_diagram(p)}});
}

CyclicInterval parse_interval_arg(int n, const std::string& arg) {
  int start = 0;
  int len = 0;
  char comma = 0;
  std::istringstream in(arg);
  if (!(in >> start >> comma >> len) || comma != ',' || !in.eof()) {
    throw Exit{kExitMalformed, "--interval expects start,len"};
  }
  try {
    return CyclicInterval(n, start, len);
  } catch (const Error& e) {
    throw Exit{kExitMalformed, e.what()};
  }
}

void run_rank(const Options& opt, const std::string& interval_arg, bool both) {
  const auto input = load_perm_or_family(opt);
  const int n = input.perm ? input.perm->n() : input.family->n();
  const auto interval = parse_interval_arg(n, interval_arg);
  int value = 0;
  if (both) {
    const auto p = input.perm ? *input.perm : permutation_from_family(*input.family);
    const auto family = input.family ? *input.family : ranked_essential_family(p);
    const int from_perm = rank_interval(p, interval);
    const int from_family = rank_from_family(family, interval);
    if (from_perm != from_family) {
      throw Exit{kExitValidation, "rank mismatch: permutation " + std::to_string(from_perm) + ", family " +
                                      std::to_string(from_family)};
    }
    value = from_perm;
  } else if (input.perm) {
    value = rank_interval(*input.perm, interval);
  } else {
    value = rank_from_family(*input.family, interval);
  }
  if (opt.text()) {
    std::cout << value << '\n';
  } else {
    print(Json{{"interval", to_json(interval)}, {"rank", value}});
  }
}

int run_retrieve(const Options& opt, bool with_trace) {
  const auto conditions = conditions_from_json(load(opt));
  const auto result = retrieve(conditions, with_trace);
  Json trace = Json::array();
  for (const auto& event : result.trace) trace.push_back(Json::parse(event.to_json()));
  if (!result.ok()) {
    const std::string kind = error_name(result.failure->kind);
    std::cerr << "error: " << kind << ": " << result.failure->detail << '\n';
    if (opt.text()) {
      std::cout << kind << '\n';
    } else {
      Json out{{"error", kind}, {"detail", result.failure->detail}};
      if (with_trace) out["trace"] = std::move(trace);
      print(out);
    }
    return kExitInvalidInput;
  }
  if (opt.text()) {
    std::cout << result.permutation->to_string() << '\n';
    for (const auto& event : trace) std::cout << event.dump() << '\n';
  } else {
    Json out = to_json(*result.permutation);
    if (with_trace) out["trace"] = std::move(trace);
    print(out);
  }
  return 0;
}

int run_validate(const Options& opt) {
  const auto family = family_from_json(load(opt));
  const auto report = validate_chess(family);
  if (opt.text()) {
    if (report.valid()) std::cout << "valid\n";
    for (const auto& v : report.violations) std::cout << rule_name(v.rule) << ": " << v.message << '\n';
  } else {
    Json violations = Json::array();
    for (const auto& v : report.violations) {
      violations.push_back(
          Json{{"rule", rule_name(v.rule)}, {"entries", entries_json(v.entries)}, {"message", v.message}});
    }
    print(Json{{"valid", report.valid()}, {"violations", std::move(violations)}});
  }
  return report.valid() ? 0 : kExitValidation;
}

void run_codim(const Options& opt, bool both) {
  const auto input = load_perm_or_family(opt);
  std::optional<int> by_length;
  std::optional<int> by_excess;
  if (input.perm) {
    by_length = length(*input.perm);
    if (both) by_excess = codim_from_family(ranked_essential_family(*input.perm));
  } else {
    require_valid(*input.family);
    by_excess = codim_from_family(*input.family);
    if (both) by_length = length(permutation_from_family(*input.family));
  }
  if (both && *by_length != *by_excess) {
    throw Exit{kExitValidation, "codimension mismatch: length " + std::to_string(*by_length) + ", excess formula " +
                                    std::to_string(*by_excess)};
  }
  if (opt.text()) {
    if (both) {
      std::cout << *by_length << ' ' << *by_excess << '\n';
    } else {
      std::cout << (by_length ? *by_length : *by_excess) << '\n';
    }
    return;
  }
  Json out{{"codim", by_length ? *by_length : *by_excess}};
  if (both) {
    out["length"] = *by_length;
    out["excess_formula"] = *by_excess;
  }
  print(out);
}

void run_polytope(const Options& opt, bool h_rep) {
  const auto family = load_family(opt);
  require_valid(family);
  const auto system = facet_system(family);
  if (h_rep || opt.text()) {
    std::cout << system.to_h_representation();
  } else {
    print(to_json(system));
  }
}

void run_bases(const Options& opt) {
  const auto family = load_family(opt);
  require_valid(family);
  const auto list = bases(family);
  if (opt.text()) {
    for (auto mask : list) {
      const auto elements = mask_elements(mask);
      for (std::size_t i = 0; i < elements.size(); ++i) std::cout << (i ? " " : "") << elements[i];
      std::cout << '\n';
    }
    return;
  }
  Json rows = Json::array();
  for (auto mask : list) rows.push_back(mask_elements(mask));
  print(Json{{"n", family.n()}, {"k", family.k()}, {"bases", std::move(rows)}});
}

void run_from_matrix(const Options& opt, bool check_nonneg) {
  const auto matrix = matrix_from_json(load(opt));
  try {
    const auto p = permutation_from_matrix(matrix, check_nonneg);
    if (opt.text()) {
      std::cout << p.to_string() << '\n';
    } else {
      print(to_json(p));
    }
  } catch (const RealizeError& e) {
    throw Exit{e.kind() == RealizeError::Kind::kNotNonNegative ? kExitValidation : kExitMalformed, e.what()};
  }
}

std::string enumerate_line(const BoundedAffinePermutation& p, bool text) {
  return text ? p.to_string() : to_json(p).dump();
}

void run_enumerate(const Options& opt, int n, std::optional<int> k, int jobs) {
  if (n < 1 || n > kMaxGroundSet) throw Exit{kExitMalformed, "--n must lie in [1, 64]"};
  if (k && (*k < 0 || *k > n)) throw Exit{kExitMalformed, "--k must lie in [0, n]"};
  if (jobs <= 1) {
    for_each_bounded_affine_permutation(n, k, [&](const BoundedAffinePermutation& p) {
      std::cout << enumerate_line(p, opt.text()) << '\n';
      return true;
    });
    return;
  }
  // Shards by pi(1), run a wave of `jobs` shards at a time, and print the
  // wave in shard order so the output matches the sequential run.
  for (int first = 1; first <= n + 1; first += jobs) {
    const int last = std::min(n + 1, first + jobs - 1);
    std::vector<std::string> buffers(last - first + 1);
    std::vector<std::thread> workers;
    for (int v = first; v <= last; ++v) {
      workers.emplace_back([&, v] {
        std::string& out = buffers[v - first];
        for_each_bounded_affine_permutation_from(n, k, v, [&](const BoundedAffinePermutation& p) {
          out += enumerate_line(p, opt.text());
          out += '\n';
          return true;
        });
      });
    }
    for (auto& w : workers) w.join();
    for (const auto& b : buffers) std::cout << b;
  }
}

void run_rank2(const Options& opt) {
  const auto matroid = rank2_from_json(load(opt));
  const auto flats = deficient_flats(matroid);
  const bool verdict = is_positroid_rank2(matroid);
  if (opt.text()) {
    std::cout << (verdict ? "positroid" : "not a positroid") << '\n';
  } else {
    Json out = to_json(flats);
    out["positroid"] = verdict;
    print(out);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Positroids through ranked essential families of cyclic intervals"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub, const std::string& what) {
    sub->add_option("input", opt.input, what + " as JSON; '-' or omitted reads stdin");
    sub->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  };

  bool diagram_flag = false, core_flag = false, connected_flag = false, excess_flag = false;
  auto* essentials = app.add_subcommand("essentials", "Ranked essential family of a permutation");
  add_common(essentials, "Permutation");
  essentials->add_flag("--diagram", diagram_flag, "Include the rendered diagram");
  essentials->add_flag("--core", core_flag, "Include the core");
  essentials->add_flag("--connected", connected_flag, "Include the connected entries");
  essentials->add_flag("--excess", excess_flag, "Include the excess of each entry");

  auto* diagram = app.add_subcommand("diagram", "Diagram of a permutation with its corners");
  add_common(diagram, "Permutation");

  std::string interval_arg;
  bool rank_both = false;
  auto* rank_cmd = app.add_subcommand("rank", "Rank of a cyclic interval");
  add_common(rank_cmd, "Permutation or family");
  rank_cmd->add_option("--interval", interval_arg, "Interval as start,len")->required();
  rank_cmd->add_flag("--both", rank_both, "Compute from permutation and family and require agreement");

  bool trace_flag = false;
  auto* retrieve_cmd = app.add_subcommand("retrieve", "Permutation satisfying rank conditions");
  add_common(retrieve_cmd, "Rank conditions");
  retrieve_cmd->add_flag("--trace", trace_flag, "Include the step trace");

  auto* validate_cmd = app.add_subcommand("validate", "Check a family against the chess axioms");
  add_common(validate_cmd, "Family");

  bool codim_both = false;
  auto* codim_cmd = app.add_subcommand("codim", "Codimension of the positroid cell");
  add_common(codim_cmd, "Permutation or family");
  codim_cmd->add_flag("--both", codim_both, "Compute by length and by the excess formula");

  bool h_rep = false;
  auto* polytope_cmd = app.add_subcommand("polytope", "Facet description of the positroid polytope");
  add_common(polytope_cmd, "Family or permutation");
  polytope_cmd->add_flag("--h-rep", h_rep, "Write an H-representation");

  auto* bases_cmd = app.add_subcommand("bases", "Bases of the positroid");
  add_common(bases_cmd, "Family or permutation");

  bool check_nonneg = false;
  auto* matrix_cmd = app.add_subcommand("from-matrix", "Permutation of the positroid of a matrix");
  add_common(matrix_cmd, "Matrix");
  matrix_cmd->add_flag("--check-nonneg", check_nonneg, "Require all maximal minors to be non-negative");

  int enum_n = 0;
  std::optional<int> enum_k;
  int jobs = 1;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "Every bounded affine permutation of size n");
  enumerate_cmd->add_option("--n", enum_n, "Size")->required();
  enumerate_cmd->add_option("--k", enum_k, "Rank");
  enumerate_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  enumerate_cmd->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "text"}));

  auto* rank2_cmd = app.add_subcommand("rank2", "Positroid test for a rank-2 matroid");
  add_common(rank2_cmd, "Parallel classes");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitMalformed;
  }

  try {
    if (*essentials) run_essentials(opt, diagram_flag, core_flag, connected_flag, excess_flag);
    if (*diagram) run_diagram(opt);
    if (*rank_cmd) run_rank(opt, interval_arg, rank_both);
    if (*retrieve_cmd) return run_retrieve(opt, trace_flag);
    if (*validate_cmd) return run_validate(opt);
    if (*codim_cmd) run_codim(opt, codim_both);
    if (*polytope_cmd) run_polytope(opt, h_rep);
    if (*bases_cmd) run_bases(opt);
    if (*matrix_cmd) run_from_matrix(opt, check_nonneg);
    if (*enumerate_cmd) run_enumerate(opt, enum_n, enum_k, jobs);
    if (*rank2_cmd) run_rank2(opt);
  } catch (const Exit& e) {
    std::cerr << "error: " << e.message << '\n';
    return e.code;
  } catch (const NotValidatedError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitMalformed;
  }
  return 0;
}
