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

#include "positroid/essential.hpp"

#include <algorithm>
#include <numeric>

namespace positroid {
namespace {

bool strictly_inside(const CyclicInterval& inner, const CyclicInterval& outer) {
  return inner != outer && inner.is_subset_of(outer);
}

// Largest total gain sum(|I & J_a| - r_a) over pairwise disjoint picks
// among candidates[from..].
int best_disjoint_gain(const std::vector<std::pair<ElementMask, int>>& candidates,
                       std::size_t from, ElementMask used) {
  int best = 0;
  for (std::size_t c = from; c < candidates.size(); ++c) {
    const auto& [mask, gain] = candidates[c];
    if (mask & used) continue;
    best = std::max(best, gain + best_disjoint_gain(candidates, c + 1, used | mask));
  }
  return best;
}

// Whether some non-empty pairwise disjoint subfamily of parts has
// deficiencies summing to target.
bool disjoint_sum_exists(const std::vector<std::pair<ElementMask, int>>& parts,
                         std::size_t from, ElementMask used, int sum, int target) {
  for (std::size_t c = from; c < parts.size(); ++c) {
    const auto& [mask, deficiency] = parts[c];
    if (mask & used) continue;
    const int next = sum + deficiency;
    if (next == target) return true;
    if (disjoint_sum_exists(parts, c + 1, used | mask, next, target)) return true;
  }
  return false;
}

std::vector<RankedInterval> minimal_containing(const RankedEssentialFamily& family,
                                               const CyclicInterval& target) {
  std::vector<RankedInterval> containing;
  for (const auto& e : family.entries()) {
    if (target.is_subset_of(e.interval)) containing.push_back(e);
  }
  std::vector<RankedInterval> minimal;
  for (const auto& e : containing) {
    const bool has_smaller = std::any_of(
        containing.begin(), containing.end(),
        [&](const RankedInterval& o) { return strictly_inside(o.interval, e.interval); });
    if (!has_smaller) minimal.push_back(e);
  }
  return minimal;
}

std::vector<RankedInterval> maximal_contained(const RankedEssentialFamily& family,
                                              const CyclicInterval& target) {
  std::vector<RankedInterval> contained;
  for (const auto& e : family.entries()) {
    if (e.interval.is_subset_of(target)) contained.push_back(e);
  }
  std::vector<RankedInterval> maximal;
  for (const auto& e : contained) {
    const bool has_larger = std::any_of(
        contained.begin(), contained.end(),
        [&](const RankedInterval& o) { return strictly_inside(e.interval, o.interval); });
    if (!has_larger) maximal.push_back(e);
  }
  return maximal;
}

std::string describe(const std::vector<RankedInterval>& entries) {
  std::string out;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) out += " ";
    out += entries[i].to_string();
  }
  return out;
}

void check_e1(const RankedEssentialFamily& family, std::vector<Violation>& out) {
  const int n = family.n();
  const int k = family.k();
  const auto full = family.find(CyclicInterval::full(n));
  if (!full) {
    out.push_back({Violation::Rule::kE1MissingFull, {},
                   "family has no entry for [1," + std::to_string(n) + "]"});
  } else if (full->rank != k) {
    out.push_back({Violation::Rule::kE1MissingFull, {*full},
                   "full entry has rank " + std::to_string(full->rank) +
                       " but k = " + std::to_string(k)});
  }
  if (k < 0 || k > n) {
    out.push_back({Violation::Rule::kE1, full ? std::vector{*full} : std::vector<RankedInterval>{},
                   "k = " + std::to_string(k) + " outside [0, " + std::to_string(n) + "]"});
  }
  for (const auto& e : family.entries()) {
    if (e.interval.is_full()) continue;
    const int len = e.interval.len();
    const bool ok = len > e.rank && e.rank >= 0 && n - len >= k - e.rank && k - e.rank > 0;
    if (!ok) {
      out.push_back({Violation::Rule::kE1, {e},
                     e.to_string() + " needs |I| > r >= 0 and |[n] \\ I| >= k - r > 0"});
    }
  }
}

void check_e2(const std::vector<RankedInterval>& proper, std::vector<Violation>& out) {
  for (const auto& small : proper) {
    for (const auto& big : proper) {
      if (!strictly_inside(small.interval, big.interval)) continue;
      const int diff = big.rank - small.rank;
      const int gap = big.interval.len() - small.interval.len();
      if (!(0 < diff && diff < gap)) {
        out.push_back({Violation::Rule::kE2, {small, big},
                       "nested " + small.to_string() + " in " + big.to_string() +
                           " needs 0 < r2 - r1 < |I2 \\ I1|"});
      }
    }
  }
}

// Two proper entries covering [n] whose intersection splits into two
// intervals A and B. Submodularity against the full entry gives
// r1 + r2 >= k + rank(A u B) >= k + max(rank(A), rank(B)).
void check_e3_wrap(const RankedEssentialFamily& family, const std::vector<RankedInterval>& proper,
                   std::vector<Violation>& out) {
  const int n = family.n();
  const ElementMask all = CyclicInterval::full(n).mask();
  for (std::size_t s = 0; s < proper.size(); ++s) {
    for (std::size_t t = s + 1; t < proper.size(); ++t) {
      const auto& a = proper[s];
      const auto& b = proper[t];
      if ((a.interval.mask() | b.interval.mask()) != all) continue;
      if (a.interval.start() == b.interval.start()) continue;
      // b starts inside a, so a's tail [i2, j1] is one piece and the
      // wrap-around [i1, j2] is the other.
      const bool b_starts_in_a = a.interval.contains(b.interval.start());
      const auto& x = b_starts_in_a ? a : b;
      const auto& y = b_starts_in_a ? b : a;
      if (!x.interval.contains(y.interval.start()) || !y.interval.contains(x.interval.start())) continue;
      // [to.start, from.end]
      const auto piece = [&](const RankedInterval& from, const RankedInterval& to) {
        const int len = ((from.interval.end() - to.interval.start()) % n + n) % n + 1;
        return CyclicInterval(n, to.interval.start(), len);
      };
      const CyclicInterval first = piece(x, y);
      const CyclicInterval second = piece(y, x);
      const int rhs = family.k() + std::max(rank_from_family(family, first),
                                            rank_from_family(family, second));
      if (a.rank + b.rank >= rhs) continue;
      out.push_back({Violation::Rule::kE3Wrap, {a, b},
                     "r1 + r2 = " + std::to_string(a.rank + b.rank) + " < " + std::to_string(rhs) +
                         " for " + a.to_string() + " " + b.to_string() + " meeting in " +
                         first.to_string() + " and " + second.to_string()});
    }
  }
}

void check_e3(const RankedEssentialFamily& family, const std::vector<RankedInterval>& proper,
              std::vector<Violation>& out) {
  const int n = family.n();
  for (const auto& a : proper) {
    for (const auto& b : proper) {
      if (a.interval == b.interval) continue;
      const int i1 = a.interval.start();
      const CyclicOrder order(n, i1);
      const int pos_j1 = order.position(a.interval.end());
      const int pos_i2 = order.position(b.interval.start());
      const int pos_j2 = order.position(b.interval.end());
      // b starts inside or after a, ends after a, and does not wrap past i1.
      if (!(pos_i2 <= pos_j2 && pos_j1 < pos_j2)) continue;

      const CyclicInterval span(n, i1, pos_j2 + 1);
      const auto containing = minimal_containing(family, span);
      if (containing.empty()) {
        out.push_back({Violation::Rule::kE3NoContaining, {a, b},
                       "no entry contains " + span.to_string() + " spanned by " +
                           a.to_string() + " and " + b.to_string()});
        continue;
      }

      const bool disjoint = pos_j1 < pos_i2;
      // Gap between a and b, or their intersection.
      const int middle_len = disjoint ? pos_i2 - pos_j1 - 1 : pos_j1 - pos_i2 + 1;
      std::vector<RankedInterval> inner;
      if (middle_len > 0) {
        const int middle_start = disjoint ? a.interval.last() + 1 : b.interval.start();
        const CyclicInterval middle(n, residue(middle_start, n), middle_len);
        inner = maximal_contained(family, middle);
      }
      struct Term {
        int rank;
        int outside;  // |middle \ J4|
      };
      std::vector<std::pair<Term, std::vector<RankedInterval>>> terms;
      if (inner.empty()) {
        terms.push_back({{0, middle_len}, {}});
      } else {
        for (const auto& e : inner) {
          terms.push_back({{e.rank, middle_len - e.interval.len()}, {e}});
        }
      }

      for (const auto& c : containing) {
        for (const auto& [term, used] : terms) {
          const int lhs = a.rank + b.rank;
          const int rhs = disjoint ? c.rank - term.rank - term.outside
                                   : c.rank + term.rank + term.outside;
          if (lhs >= rhs) continue;
          std::vector<RankedInterval> involved{a, b, c};
          involved.insert(involved.end(), used.begin(), used.end());
          out.push_back({disjoint ? Violation::Rule::kE3Disjoint : Violation::Rule::kE3Overlap,
                         involved,
                         "r1 + r2 = " + std::to_string(lhs) + " < " + std::to_string(rhs) +
                             " for " + describe(involved)});
        }
      }
    }
  }
}

}  // namespace

int rank_from_family(const RankedEssentialFamily& family, const CyclicInterval& interval) {
  const ElementMask target = interval.mask();
  int best = interval.len();
  for (const auto& e : family.entries()) {
    best = std::min(best, e.rank + popcount(target & ~e.interval.mask()));
  }
  return best;
}

int rank_from_disjoint_subfamilies(const std::vector<RankedInterval>& entries,
                                   const CyclicInterval& interval) {
  const ElementMask target = interval.mask();
  std::vector<std::pair<ElementMask, int>> candidates;
  for (const auto& e : entries) {
    const ElementMask m = e.interval.mask();
    const int gain = popcount(target & m) - e.rank;
    if (gain > 0) candidates.emplace_back(m, gain);
  }
  return interval.len() - best_disjoint_gain(candidates, 0, 0);
}

std::vector<RankedInterval> connected_entries(const RankedEssentialFamily& family) {
  std::vector<RankedInterval> out;
  for (const auto& e : family.entries()) {
    if (e.interval.is_full()) {
      out.push_back(e);
      continue;
    }
    std::vector<std::pair<ElementMask, int>> parts;
    for (const auto& j : family.entries()) {
      if (strictly_inside(j.interval, e.interval)) {
        parts.emplace_back(j.interval.mask(), j.interval.len() - j.rank);
      }
    }
    const int target = e.interval.len() - e.rank;
    if (!disjoint_sum_exists(parts, 0, 0, 0, target)) out.push_back(e);
  }
  return out;
}

int ExcessTable::at(const CyclicInterval& interval) const {
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].interval == interval) return excess[i];
  }
  throw Error("excess: interval " + interval.to_string() + " is not in the family");
}

ExcessTable excess(const RankedEssentialFamily& family) {
  const auto& entries = family.entries();
  std::vector<std::size_t> order(entries.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return entries[a].interval.len() < entries[b].interval.len();
  });
  ExcessTable table{entries, std::vector<int>(entries.size(), 0)};
  for (std::size_t idx : order) {
    const auto& e = entries[idx];
    int value = e.interval.len() - e.rank;
    for (std::size_t other = 0; other < entries.size(); ++other) {
      if (strictly_inside(entries[other].interval, e.interval)) value -= table.excess[other];
    }
    table.excess[idx] = value;
  }
  return table;
}

std::vector<RankedInterval> core(const RankedEssentialFamily& family) {
  const ExcessTable table = excess(family);
  std::vector<RankedInterval> out;
  for (std::size_t i = 0; i < table.entries.size(); ++i) {
    if (table.entries[i].interval.is_full() || table.excess[i] > 0) {
      out.push_back(table.entries[i]);
    }
  }
  return out;
}

std::string rule_name(Violation::Rule rule) {
  switch (rule) {
    case Violation::Rule::kE1MissingFull: return "E1-full";
    case Violation::Rule::kE1: return "E1";
    case Violation::Rule::kE2: return "E2";
    case Violation::Rule::kE3Disjoint: return "E3-disjoint";
    case Violation::Rule::kE3Overlap: return "E3-overlap";
    case Violation::Rule::kE3NoContaining: return "E3-no-containing";
    case Violation::Rule::kE3Wrap: return "E3-wrap";
  }
  return "unknown";
}

ChessReport validate_chess(const RankedEssentialFamily& family) {
  ChessReport report;
  check_e1(family, report.violations);
  std::vector<RankedInterval> proper;
  for (const auto& e : family.entries()) {
    if (!e.interval.is_full()) proper.push_back(e);
  }
  check_e2(proper, report.violations);
  check_e3(family, proper, report.violations);
  check_e3_wrap(family, proper, report.violations);
  return report;
}

NotValidatedError::NotValidatedError(ChessReport report)
    : Error("family violates " + rule_name(report.violations.front().rule) + ": " +
            report.violations.front().message),
      report_(std::move(report)) {}

RankFunction::RankFunction(RankedEssentialFamily family) : family_(std::move(family)) {
  ChessReport report = validate_chess(family_);
  if (!report.valid()) throw NotValidatedError(std::move(report));
}

int RankFunction::operator()(const CyclicInterval& interval) const {
  return rank_from_family(family_, interval);
}

int RankFunction::of_lifts(int first, int last) const {
  const int len = last - first + 1;
  if (len <= 0) return 0;
  const int n = family_.n();
  if (len >= n) return (*this)(CyclicInterval::full(n));
  return (*this)(CyclicInterval(n, residue(first, n), len));
}

RankFunction rank_function_from_axioms(const RankedEssentialFamily& family) {
  return RankFunction(family);
}

BoundedAffinePermutation permutation_from_family(const RankedEssentialFamily& family) {
  const RankFunction r(family);
  const int n = family.n();
  std::vector<int> window(n);
  for (int i = 1; i <= n; ++i) {
    int j = i;
    while (j < i + n && r.of_lifts(i, j) != r.of_lifts(i + 1, j)) ++j;
    window[i - 1] = j;
  }
  return BoundedAffinePermutation::from_window(window);
}

}  // namespace positroid
