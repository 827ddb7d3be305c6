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

#include "positroid/retrieval.hpp"

#include <algorithm>
#include <optional>
#include <unordered_set>

#include "json.hpp"

namespace positroid {
namespace {

// min{ beta in [1, n+1] : beta - 1 - d_D(h, beta) = target }.
std::optional<int> first_column_with_rank(const ProperDotting& dotting, int row, int target) {
  for (int beta = 1; beta <= dotting.n() + 1; ++beta) {
    if (beta - 1 - dotting.dependency_at({row, beta}) == target) return beta;
  }
  return std::nullopt;
}

std::string square_text(Square sq) {
  return "(" + std::to_string(sq.row) + "," + std::to_string(sq.col) + ")";
}

class Run {
 public:
  Run(const RankConditionSet& conditions, bool trace)
      : conditions_(conditions), dotting_(conditions.n()), tracing_(trace) {}

  RetrievalResult execute() {
    const int n = conditions_.n();
    std::optional<int> k;
    for (const auto& c : conditions_.conditions()) {
      if (c.square == Square{1, n}) k = c.rank;
    }
    if (!k) {
      return fail(RetrievalErrorKind::kMissingFullLabel,
                  "no condition labels the square (1," + std::to_string(n) + ")");
    }
    for (const auto& c : conditions_.conditions()) {
      if (c.rank > *k) {
        return fail(RetrievalErrorKind::kNonMaximalLabel,
                    "label " + std::to_string(c.rank) + " at " + square_text(c.square) +
                        " exceeds the full-set label " + std::to_string(*k));
      }
    }

    std::vector<RankCondition> sorted = conditions_.conditions();
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const RankCondition& a, const RankCondition& b) {
                       if (a.rank != b.rank) return a.rank < b.rank;
                       if (a.square.row != b.square.row) return a.square.row < b.square.row;
                       return a.square.col < b.square.col;
                     });

    for (const auto& c : sorted) {
      if (auto failure = saturate(c)) return *failure;
    }

    for (int h = 1; h <= n; ++h) {
      if (dotting_.has_dot(h)) continue;
      const auto col = first_column_with_rank(dotting_, h, *k);
      if (!col) {
        return fail(RetrievalErrorKind::kRowOverflow,
                    "row " + std::to_string(h) + " reaches no column of rank " +
                        std::to_string(*k));
      }
      dotting_.place(h, *col);
      record({TraceEvent::Kind::kRowFilled, 0, {h, *col}});
    }

    if (!dotting_.is_proper()) {
      return fail(RetrievalErrorKind::kNotProper, "two dots share an antidiagonal");
    }
    for (const auto& c : sorted) {
      const int got = dotting_.rank_at(c.square);
      if (got != c.rank) {
        return fail(RetrievalErrorKind::kRankMismatch,
                    "square " + square_text(c.square) + " has rank " + std::to_string(got) +
                        ", expected " + std::to_string(c.rank));
      }
    }

    RetrievalResult result;
    result.permutation = dotting_.to_permutation();
    result.trace = std::move(trace_);
    return result;
  }

 private:
  // Adds dots until the dependency count of the condition's square reaches
  // j - r.
  std::optional<RetrievalResult> saturate(const RankCondition& c) {
    const int n = conditions_.n();
    const auto [i, j] = c.square;
    record({TraceEvent::Kind::kConditionStart, c.rank, c.square});
    int a = j - c.rank - dotting_.dependency_at(c.square);
    record({TraceEvent::Kind::kExcessComputed, 0, {}, a});
    while (a > 0) {
      std::optional<int> row;
      for (int t = 0; t < n && !row; ++t) {
        if (!dotting_.has_dot(i + t)) row = residue(i + t, n);
      }
      if (!row) {
        return fail(RetrievalErrorKind::kNoProgress,
                    "square " + square_text(c.square) + " still needs " + std::to_string(a) +
                        " dots but every row is filled");
      }
      const auto col = first_column_with_rank(dotting_, *row, c.rank);
      if (!col) {
        return fail(RetrievalErrorKind::kNoProgress,
                    "row " + std::to_string(*row) + " reaches no column of rank " +
                        std::to_string(c.rank) + " for square " + square_text(c.square));
      }
      dotting_.place(*row, *col);
      record({TraceEvent::Kind::kDotPlaced, 0, {*row, *col}});
      const int b = j - c.rank - dotting_.dependency_at(c.square);
      record({TraceEvent::Kind::kExcessComputed, 0, {}, b});
      if (b == a) {
        return fail(RetrievalErrorKind::kNoProgress,
                    "dot at " + square_text({*row, *col}) + " left square " +
                        square_text(c.square) + " unchanged");
      }
      a = b;
    }
    return std::nullopt;
  }

  RetrievalResult fail(RetrievalErrorKind kind, std::string detail) {
    TraceEvent ev{TraceEvent::Kind::kError};
    ev.error = error_name(kind);
    ev.context = detail;
    record(std::move(ev));
    RetrievalResult result;
    result.failure = RetrievalFailure{kind, std::move(detail)};
    result.trace = std::move(trace_);
    return result;
  }

  void record(TraceEvent ev) {
    if (tracing_) trace_.push_back(std::move(ev));
  }

  const RankConditionSet& conditions_;
  ProperDotting dotting_;
  bool tracing_;
  RetrievalTrace trace_;
};

}  // namespace

RankConditionSet::RankConditionSet(int n, std::vector<RankCondition> conditions)
    : n_(n), conditions_(std::move(conditions)) {
  if (n < 1 || n > kMaxGroundSet) {
    throw Error("rank conditions: ground set size " + std::to_string(n) + " out of range");
  }
  for (const auto& c : conditions_) {
    if (c.square.row < 1 || c.square.row > n || c.square.col < 1 || c.square.col > n) {
      throw Error("rank conditions: square " + square_text(c.square) + " outside [1," +
                  std::to_string(n) + "] x [1," + std::to_string(n) + "]");
    }
    if (c.rank < 0) {
      throw Error("rank conditions: negative rank at " + square_text(c.square));
    }
  }
}

RankConditionSet RankConditionSet::from_intervals(int n,
                                                  const std::vector<RankedInterval>& entries) {
  std::vector<RankCondition> conditions;
  conditions.reserve(entries.size());
  for (const auto& e : entries) conditions.push_back({e.rank, square_of(e.interval)});
  return RankConditionSet(n, std::move(conditions));
}

int ProperDotting::dot_count() const {
  return static_cast<int>(std::count_if(col_.begin(), col_.end(), [](int c) { return c != 0; }));
}

bool ProperDotting::is_proper() const {
  std::vector<bool> seen(n_, false);
  for (int row = 1; row <= n_; ++row) {
    const int c = col_[row - 1];
    if (c == 0) continue;
    const int diag = residue(row + c, n_) - 1;
    if (seen[diag]) return false;
    seen[diag] = true;
  }
  return true;
}

int ProperDotting::rank_at(Square sq) const {
  return region_P(n_, sq).count_dots([this](int row) { return column(row); });
}

int ProperDotting::dependency_at(Square sq) const {
  return region_T(n_, sq).count_dots([this](int row) { return column(row); });
}

BoundedAffinePermutation ProperDotting::to_permutation() const {
  if (!is_maximal()) throw Error("dotting has an empty row");
  std::vector<int> window(n_);
  for (int h = 1; h <= n_; ++h) window[h - 1] = h + col_[h - 1] - 1;
  return BoundedAffinePermutation::from_window(window);
}

int r_D(const ProperDotting& dotting, Square sq) { return dotting.rank_at(sq); }
int d_D(const ProperDotting& dotting, Square sq) { return dotting.dependency_at(sq); }

std::string TraceEvent::to_json() const {
  nlohmann::ordered_json j;
  switch (kind) {
    case Kind::kConditionStart:
      j["event"] = "ConditionStart";
      j["rank"] = rank;
      j["row"] = square.row;
      j["col"] = square.col;
      break;
    case Kind::kExcessComputed:
      j["event"] = "ExcessComputed";
      j["excess"] = excess;
      break;
    case Kind::kDotPlaced:
    case Kind::kRowFilled:
      j["event"] = kind == Kind::kDotPlaced ? "DotPlaced" : "RowFilled";
      j["row"] = square.row;
      j["col"] = square.col;
      break;
    case Kind::kError:
      j["event"] = "Error";
      j["kind"] = error;
      j["context"] = context;
      break;
  }
  return j.dump();
}

ProperDotting replay(int n, const RetrievalTrace& trace) {
  ProperDotting dotting(n);
  for (const auto& ev : trace) {
    if (ev.kind == TraceEvent::Kind::kDotPlaced || ev.kind == TraceEvent::Kind::kRowFilled) {
      dotting.place(ev.square.row, ev.square.col);
    }
  }
  return dotting;
}

std::string error_name(RetrievalErrorKind kind) {
  switch (kind) {
    case RetrievalErrorKind::kMissingFullLabel: return "MissingFullLabel";
    case RetrievalErrorKind::kNonMaximalLabel: return "NonMaximalLabel";
    case RetrievalErrorKind::kNoProgress: return "NoProgress";
    case RetrievalErrorKind::kRowOverflow: return "RowOverflow";
    case RetrievalErrorKind::kNotProper: return "NotProper";
    case RetrievalErrorKind::kRankMismatch: return "RankMismatch";
  }
  return "Unknown";
}

RetrievalResult retrieve(const RankConditionSet& conditions, bool trace) {
  return Run(conditions, trace).execute();
}

bool verify_conditions(const BoundedAffinePermutation& p, const RankConditionSet& conditions) {
  if (p.n() != conditions.n()) return false;
  for (const auto& c : conditions.conditions()) {
    if (rank_interval(p, interval_of(p.n(), c.square)) != c.rank) return false;
  }
  return true;
}

}  // namespace positroid
