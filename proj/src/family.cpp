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

#include "positroid/family.hpp"

#include <algorithm>

namespace positroid {

std::string RankedInterval::to_string() const {
  return "(" + std::to_string(rank) + "," + interval.to_string() + ")";
}

RankedEssentialFamily::RankedEssentialFamily(int n, int k,
                                             std::vector<RankedInterval> entries)
    : n_(n), k_(k), entries_(std::move(entries)) {
  for (const auto& e : entries_) {
    if (e.interval.n() != n_) {
      throw Error("family over [" + std::to_string(n_) + "] contains interval " +
                  e.interval.to_string() + " over [" +
                  std::to_string(e.interval.n()) + "]");
    }
  }
  std::sort(entries_.begin(), entries_.end());
  for (std::size_t i = 1; i < entries_.size(); ++i) {
    if (entries_[i].interval == entries_[i - 1].interval) {
      throw Error("family lists interval " + entries_[i].interval.to_string() +
                  " twice");
    }
  }
}

RankedEssentialFamily RankedEssentialFamily::with_full_entry(
    int n, int k, std::vector<RankedInterval> entries) {
  const bool has_full = std::any_of(entries.begin(), entries.end(),
                                    [](const auto& e) { return e.interval.is_full(); });
  if (!has_full) entries.push_back({k, CyclicInterval::full(n)});
  return RankedEssentialFamily(n, k, std::move(entries));
}

std::optional<RankedInterval> RankedEssentialFamily::find(
    const CyclicInterval& interval) const {
  for (const auto& e : entries_) {
    if (e.interval == interval) return e;
  }
  return std::nullopt;
}

bool RankedEssentialFamily::has_full_entry() const {
  auto full = find(CyclicInterval::full(n_));
  return full && full->rank == k_;
}

std::string RankedEssentialFamily::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ", ";
    out += entries_[i].to_string();
  }
  return out + "}";
}

}  // namespace positroid
