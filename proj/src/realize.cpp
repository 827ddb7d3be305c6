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

#include "positroid/realize.hpp"

#include <algorithm>
#include <cctype>

#include "positroid/geometry.hpp"

namespace positroid {
namespace {

using Vec = std::vector<mpz_class>;

[[noreturn]] void malformed(const std::string& what) {
  throw RealizeError(RealizeError::Kind::kMalformed, what);
}

bool all_digits(const std::string& s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

// Divide out the content so entries stay small.
void primitive(Vec& v) {
  mpz_class g = 0;
  for (const auto& x : v) g = gcd(g, x);
  if (g > 1) {
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  }
}

// Echelon basis of integer vectors, grown one column at a time.
class SpanBasis {
 public:
  explicit SpanBasis(int dim) : dim_(dim) {}

  // Reduces v against the basis; v is zero afterwards iff it was in the span.
  bool reduce(Vec& v) const {
    for (std::size_t b = 0; b < rows_.size(); ++b) {
      const int p = pivots_[b];
      if (sgn(v[p]) == 0) continue;
      const mpz_class f = v[p];
      const mpz_class g = rows_[b][p];
      for (int t = 0; t < dim_; ++t) v[t] = g * v[t] - f * rows_[b][t];
      primitive(v);
    }
    return std::all_of(v.begin(), v.end(), [](const mpz_class& x) { return sgn(x) == 0; });
  }

  bool contains(Vec v) const { return reduce(v); }

  void add(Vec v) {
    if (reduce(v)) return;
    int p = 0;
    while (sgn(v[p]) == 0) ++p;
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
  }

  int size() const { return static_cast<int>(rows_.size()); }

 private:
  int dim_;
  std::vector<Vec> rows_;
  std::vector<int> pivots_;
};

// Bareiss elimination on a square integer matrix, returning sign(det).
int bareiss_sign(std::vector<Vec> a) {
  const int k = static_cast<int>(a.size());
  if (k == 0) return 1;
  int sign = 1;
  mpz_class prev = 1;
  for (int c = 0; c < k; ++c) {
    int p = c;
    while (p < k && sgn(a[p][c]) == 0) ++p;
    if (p == k) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      sign = -sign;
    }
    for (int r = c + 1; r < k; ++r) {
      for (int t = c + 1; t < k; ++t) {
        a[r][t] = a[c][c] * a[r][t] - a[r][c] * a[c][t];
        mpz_divexact(a[r][t].get_mpz_t(), a[r][t].get_mpz_t(), prev.get_mpz_t());
      }
      a[r][c] = 0;
    }
    prev = a[c][c];
  }
  return sign * sgn(a[k - 1][k - 1]);
}

void require_full_rank(const RationalMatrix& m) {
  if (matrix_rank(m) != m.k()) {
    throw RealizeError(RealizeError::Kind::kNotFullRank,
                       "matrix does not have full row rank " + std::to_string(m.k()));
  }
}

// Visits every k-subset of [0, n) in lexicographic order.
template <typename Visit>
void for_each_subset(int n, int k, Visit&& visit) {
  std::vector<int> cols(k);
  for (int i = 0; i < k; ++i) cols[i] = i;
  while (true) {
    visit(cols);
    int i = k - 1;
    while (i >= 0 && cols[i] == n - k + i) --i;
    if (i < 0) return;
    ++cols[i];
    for (int j = i + 1; j < k; ++j) cols[j] = cols[j - 1] + 1;
  }
}

int minor_sign_0(const std::vector<Vec>& columns, const std::vector<int>& cols) {
  const int k = static_cast<int>(cols.size());
  std::vector<Vec> a(k, Vec(k));
  for (int r = 0; r < k; ++r) {
    for (int c = 0; c < k; ++c) a[r][c] = columns[cols[c]][r];
  }
  return bareiss_sign(std::move(a));
}

std::vector<Vec> integer_columns(const RationalMatrix& m) {
  std::vector<Vec> out;
  out.reserve(m.n());
  for (int c = 0; c < m.n(); ++c) out.push_back(m.integer_column(c));
  return out;
}

}  // namespace

mpq_class parse_rational(const std::string& text) {
  std::string s = text;
  bool negative = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    negative = s[0] == '-';
    s.erase(0, 1);
  }
  mpq_class q;
  if (auto slash = s.find('/'); slash != std::string::npos) {
    const std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) malformed("bad rational \"" + text + "\"");
    mpz_class d(den);
    if (d == 0) malformed("zero denominator in \"" + text + "\"");
    q = mpq_class(mpz_class(num), d);
  } else {
    const auto dot = s.find('.');
    std::string whole = s.substr(0, dot);
    std::string frac = dot == std::string::npos ? "" : s.substr(dot + 1);
    if (whole.empty() && frac.empty()) malformed("bad number \"" + text + "\"");
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
        (dot != std::string::npos && frac.empty())) {
      malformed("bad number \"" + text + "\"");
    }
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    q = mpq_class(mpz_class(whole.empty() ? "0" : whole) * scale + mpz_class(frac.empty() ? "0" : frac),
                  scale);
  }
  q.canonicalize();
  return negative ? mpq_class(-q) : q;
}

RationalMatrix::RationalMatrix(int k, int n, std::vector<mpq_class> entries)
    : k_(k), n_(n), entries_(std::move(entries)) {
  if (n < 1 || n > kMaxGroundSet) malformed("matrix: n = " + std::to_string(n) + " out of range");
  if (k < 0 || k > n) malformed("matrix: need 0 <= k <= n, got k = " + std::to_string(k));
  if (entries_.size() != static_cast<std::size_t>(k) * n) {
    malformed("matrix: expected " + std::to_string(k * n) + " entries, got " +
              std::to_string(entries_.size()));
  }
}

RationalMatrix RationalMatrix::parse(int k, int n,
                                     const std::vector<std::vector<std::string>>& rows) {
  if (rows.size() != static_cast<std::size_t>(std::max(k, 0))) {
    malformed("matrix: expected " + std::to_string(k) + " rows, got " +
              std::to_string(rows.size()));
  }
  std::vector<mpq_class> entries;
  for (const auto& row : rows) {
    if (row.size() != static_cast<std::size_t>(n)) {
      malformed("matrix: row of length " + std::to_string(row.size()) + ", expected " +
                std::to_string(n));
    }
    for (const auto& e : row) entries.push_back(parse_rational(e));
  }
  return RationalMatrix(k, n, std::move(entries));
}

std::vector<mpz_class> RationalMatrix::integer_column(int c) const {
  mpz_class l = 1;
  for (int r = 0; r < k_; ++r) l = lcm(l, at(r, c).get_den());
  Vec out(k_);
  for (int r = 0; r < k_; ++r) {
    out[r] = at(r, c).get_num() * (l / at(r, c).get_den());
  }
  return out;
}

int matrix_rank(const RationalMatrix& m) {
  SpanBasis basis(m.k());
  for (int c = 0; c < m.n() && basis.size() < m.k(); ++c) basis.add(m.integer_column(c));
  return basis.size();
}

int minor_sign(const RationalMatrix& m, const std::vector<int>& columns) {
  if (static_cast<int>(columns.size()) != m.k()) {
    throw Error("minor_sign: need " + std::to_string(m.k()) + " columns");
  }
  std::vector<Vec> cols;
  std::vector<int> idx;
  for (int c : columns) {
    if (c < 1 || c > m.n()) throw Error("minor_sign: column " + std::to_string(c) + " out of range");
    idx.push_back(static_cast<int>(cols.size()));
    cols.push_back(m.integer_column(c - 1));
  }
  return minor_sign_0(cols, idx);
}

std::vector<ElementMask> matroid_bases(const RationalMatrix& m, int bound) {
  if (m.n() > bound) throw TooLargeError("matroid_bases", m.n(), bound);
  require_full_rank(m);
  const auto columns = integer_columns(m);
  std::vector<ElementMask> out;
  for_each_subset(m.n(), m.k(), [&](const std::vector<int>& cols) {
    if (minor_sign_0(columns, cols) != 0) {
      ElementMask mask = 0;
      for (int c : cols) mask |= ElementMask{1} << c;
      out.push_back(mask);
    }
  });
  return out;
}

bool is_positively_realizing(const RationalMatrix& m) {
  const auto columns = integer_columns(m);
  bool ok = true;
  for_each_subset(m.n(), m.k(), [&](const std::vector<int>& cols) {
    if (ok && minor_sign_0(columns, cols) < 0) ok = false;
  });
  return ok;
}

BoundedAffinePermutation permutation_from_matrix(const RationalMatrix& m,
                                                 bool check_nonnegative) {
  require_full_rank(m);
  if (check_nonnegative && !is_positively_realizing(m)) {
    throw RealizeError(RealizeError::Kind::kNotNonNegative,
                       "matrix has a negative maximal minor");
  }
  const int n = m.n();
  const auto columns = integer_columns(m);
  std::vector<int> window(n);
  for (int i = 1; i <= n; ++i) {
    SpanBasis span(m.k());
    int j = i;
    // Grow the span of columns i+1..j until it captures column i.
    while (!span.contains(columns[i - 1]) && j < i + n) {
      ++j;
      if (j < i + n) span.add(columns[residue(j, n) - 1]);
    }
    window[i - 1] = j;
  }
  return BoundedAffinePermutation::from_window(window);
}

}  // namespace positroid
