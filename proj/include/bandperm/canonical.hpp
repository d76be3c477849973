#pragma once

// Canonicity and settledness of permutation matrices, reconstruction of a
// Strang canonical matrix from its signs, the closed-form factor count of
// settled canonical matrices, and circulant permutations.

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "bandperm/error.hpp"
#include "bandperm/permutation.hpp"
#include "bandperm/ranking.hpp"
#include "bandperm/structure.hpp"

namespace bandperm {

struct CanonicityFlags {
  bool upper_canonical = false;
  bool lower_canonical = false;
  bool strang_canonical = false;
  bool half_canonical = false;
  bool row_settled = false;
  bool column_settled = false;
  bool settled = false;
  bool tracefree = false;

  friend bool operator==(const CanonicityFlags&, const CanonicityFlags&) = default;
};

namespace detail {

// Values on rows of the given sign increase from top to bottom. Rows in
// different sections are never inverted, so checking the whole matrix is the
// same as checking every section.
inline bool rows_of_sign_contented(const Permutation& p, Sign s) {
  int last = 0;
  for (int i = 1; i <= p.size(); ++i) {
    if (row_sign(p, i) != s) continue;
    if (p(i) < last) return false;
    last = p(i);
  }
  return true;
}

// Every positive row of the range lies above every negative row.
inline bool positive_rows_above_negative(const Permutation& p, RowRange r) {
  int last_positive = 0;
  int first_negative = r.hi + 1;
  for (int i = r.lo; i <= r.hi; ++i) {
    const Sign s = row_sign(p, i);
    if (s == Sign::positive) last_positive = i;
    if (s == Sign::negative && first_negative > r.hi) first_negative = i;
  }
  return last_positive < first_negative;
}

// Every negative column of the range lies left of every positive column.
inline bool negative_cols_left_of_positive(const SignProfile& sp, RowRange r) {
  int last_negative = 0;
  int first_positive = r.hi + 1;
  for (int j = r.lo; j <= r.hi; ++j) {
    const Sign s = sp.cols[j - 1];
    if (s == Sign::negative) last_negative = j;
    if (s == Sign::positive && first_positive > r.hi) first_positive = j;
  }
  return last_negative < first_positive;
}

}  // namespace detail

inline bool is_strang_canonical(const Permutation& p) {
  return detail::rows_of_sign_contented(p, Sign::positive) &&
         detail::rows_of_sign_contented(p, Sign::negative);
}

inline bool is_row_settled(const Permutation& p) {
  for (const RowRange& r : sections(p))
    if (!detail::positive_rows_above_negative(p, r)) return false;
  return true;
}

inline bool is_column_settled(const Permutation& p) {
  const SignProfile sp = signs(p);
  for (const RowRange& r : sections(p))
    if (!detail::negative_cols_left_of_positive(sp, r)) return false;
  return true;
}

/// No nontrivial section contains a fixed point.
inline bool nontrivial_sections_tracefree(const Permutation& p) {
  for (const RowRange& r : sections(p)) {
    if (r.length() == 1) continue;
    for (int i = r.lo; i <= r.hi; ++i)
      if (p(i) == i) return false;
  }
  return true;
}

inline CanonicityFlags classify(const Permutation& p) {
  CanonicityFlags f;
  f.upper_canonical = detail::rows_of_sign_contented(p, Sign::positive);
  f.lower_canonical = detail::rows_of_sign_contented(p, Sign::negative);
  f.strang_canonical = f.upper_canonical && f.lower_canonical;
  f.half_canonical = f.upper_canonical || f.lower_canonical;
  f.row_settled = is_row_settled(p);
  f.column_settled = is_column_settled(p);
  f.settled = f.row_settled || f.column_settled;
  f.tracefree = true;
  for (int i = 1; i <= p.size(); ++i)
    if (p(i) == i) f.tracefree = false;
  return f;
}

/// The unique Strang canonical matrix with the given row and column signs:
/// the m-th neutral, positive and negative rows meet the m-th neutral,
/// positive and negative columns respectively.
inline Permutation canonical_from_signs(const SignProfile& prof) {
  const std::size_t n = prof.rows.size();
  if (n == 0) throw MalformedInput("sign profile is empty");
  if (prof.cols.size() != n)
    throw MalformedInput("sign profile has " + std::to_string(n) + " rows but " +
                         std::to_string(prof.cols.size()) + " columns");
  auto indices = [](const std::vector<Sign>& v, Sign s) {
    std::vector<int> out;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] == s) out.push_back(static_cast<int>(i) + 1);
    return out;
  };
  std::vector<int> sigma(n, 0);
  for (Sign s : {Sign::neutral, Sign::positive, Sign::negative}) {
    const std::vector<int> rows = indices(prof.rows, s);
    const std::vector<int> cols = indices(prof.cols, s);
    if (rows.size() != cols.size())
      throw MalformedInput(std::string("sign profile has ") + std::to_string(rows.size()) +
                           " '" + sign_char(s) + "' rows but " + std::to_string(cols.size()) +
                           " '" + sign_char(s) + "' columns");
    for (std::size_t m = 0; m < rows.size(); ++m) {
      const int r = rows[m];
      const int c = cols[m];
      if (sign_of(c - r) != s)
        throw MalformedInput(std::string("sign profile is not realisable: the '") +
                             sign_char(s) + "' 1 of row " + std::to_string(r) +
                             " would land in column " + std::to_string(c));
      sigma[static_cast<std::size_t>(r) - 1] = c;
    }
  }
  return Permutation::from_trusted(std::move(sigma));
}

namespace detail {

// Both sides of the closed-form count for one tracefree row-settled Strang
// canonical section s of size n with m positive rows:
//   max_{i<=m} (s(i) + m - 2i)   and   max_{i>m} (2i - m - 1 - s(i)).
inline std::pair<int, int> settled_count_expressions(const Permutation& s) {
  const int n = s.size();
  int m = 0;
  while (m < n && s(m + 1) > m + 1) ++m;
  int upper = 0;
  for (int i = 1; i <= m; ++i) upper = std::max(upper, s(i) + m - 2 * i);
  int lower = 0;
  for (int i = m + 1; i <= n; ++i) lower = std::max(lower, 2 * i - m - 1 - s(i));
  return {upper, lower};
}

}  // namespace detail

/// Predicted number of reducing-matrix factors of a settled Strang canonical
/// matrix whose nontrivial sections are tracefree. The row-settled case is
/// evaluated section by section; the column-settled case on the inverse.
/// Throws InternalError if the two closed-form expressions disagree.
inline int settled_factor_count(const Permutation& p) {
  const CanonicityFlags f = classify(p);
  if (!f.strang_canonical || !f.settled || !nontrivial_sections_tracefree(p))
    throw PreconditionError(
        "settled_factor_count applies only to settled Strang canonical matrices with "
        "tracefree nontrivial sections");
  const Permutation q = f.row_settled ? p : inverse(p);
  int count = 0;
  for (const RowRange& r : sections(q)) {
    if (r.length() == 1) continue;
    const auto [upper, lower] = detail::settled_count_expressions(section_of(q, r));
    if (upper != lower)
      throw InternalError("closed-form counts disagree on section " + format(r) + " of " +
                          format(p) + ": " + std::to_string(upper) + " vs " +
                          std::to_string(lower));
    count = std::max(count, upper);
  }
  return count;
}

struct Circulant {
  Permutation perm;
  int predicted_bandwidth;
};

/// sigma(m) = ((k + m - 2) mod n) + 1 for 1 < k <= n, with the bandwidth
/// k - 1 when k - 1 >= n/2 and n - k + 1 otherwise.
inline Circulant circulant(int n, int k) {
  if (n < 2 || k <= 1 || k > n)
    throw PreconditionError("circulant: need 1 < k <= n, got n=" + std::to_string(n) +
                            " k=" + std::to_string(k));
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int m = 1; m <= n; ++m) v[m - 1] = ((k + m - 2) % n) + 1;
  const int w = 2 * (k - 1) >= n ? k - 1 : n - k + 1;
  return {Permutation::from_trusted(std::move(v)), w};
}

inline constexpr int kMaxEnumerationSize = 9;

/// Every Strang canonical permutation of size n, in rank order.
inline std::vector<Permutation> enumerate_strang_canonical(int n) {
  if (n > kMaxEnumerationSize)
    throw ResourceError("enumerate_strang_canonical: n must be <= " +
                        std::to_string(kMaxEnumerationSize));
  std::vector<Permutation> out;
  for_each_permutation(n, [&](const Permutation& p) {
    if (is_strang_canonical(p)) out.push_back(p);
  });
  return out;
}

}  // namespace bandperm
