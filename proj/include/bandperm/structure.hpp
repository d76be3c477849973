#pragma once

// Structural analysis of a permutation matrix: row/column signs, sections,
// inversions, inverted blocks and the distance table.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bandperm/error.hpp"
#include "bandperm/permutation.hpp"

namespace bandperm {

enum class Sign : std::int8_t { negative = -1, neutral = 0, positive = 1 };

inline Sign sign_of(int x) {
  return x > 0 ? Sign::positive : (x < 0 ? Sign::negative : Sign::neutral);
}

inline char sign_char(Sign s) {
  switch (s) {
    case Sign::positive: return '+';
    case Sign::negative: return '-';
    case Sign::neutral: return '0';
  }
  return '?';
}

/// Row r is positive when its 1 lies right of the diagonal.
inline Sign row_sign(const Permutation& p, int r) { return sign_of(p(r) - r); }

struct SignProfile {
  std::vector<Sign> rows;
  std::vector<Sign> cols;

  friend bool operator==(const SignProfile&, const SignProfile&) = default;
};

/// Column j is positive when its 1 lies above the diagonal.
inline SignProfile signs(const Permutation& p) {
  const int n = p.size();
  SignProfile out;
  out.rows.resize(static_cast<std::size_t>(n));
  out.cols.resize(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    out.rows[i - 1] = sign_of(p(i) - i);
    // the 1 of column p(i) sits in row i
    out.cols[p(i) - 1] = sign_of(p(i) - i);
  }
  return out;
}

inline std::string format_signs(const std::vector<Sign>& s) {
  std::string out;
  for (Sign x : s) out += sign_char(x);
  return out;
}

inline std::vector<Sign> parse_signs(std::string_view text) {
  std::vector<Sign> out;
  for (char c : text) {
    switch (c) {
      case '+': out.push_back(Sign::positive); break;
      case '-': out.push_back(Sign::negative); break;
      case '0': out.push_back(Sign::neutral); break;
      case ' ': case '\t': case '\r': case '\n': break;
      default:
        throw MalformedInput(std::string("invalid sign character '") + c + "'");
    }
  }
  return out;
}

/// Rows then columns, one line each.
inline std::string format(const SignProfile& s) {
  return format_signs(s.rows) + "\n" + format_signs(s.cols);
}

/// Consecutive rows lo..hi, 1-based and inclusive.
struct RowRange {
  int lo;
  int hi;

  int length() const noexcept { return hi - lo + 1; }
  bool contains(int r) const noexcept { return lo <= r && r <= hi; }
  friend bool operator==(const RowRange&, const RowRange&) = default;
};

inline std::string format(const RowRange& r) {
  return "[" + std::to_string(r.lo) + ".." + std::to_string(r.hi) + "]";
}

/// Blocks of the finest block-diagonal partition. A block ends after row k
/// exactly when max(sigma(1..k)) = k.
inline std::vector<RowRange> sections(const Permutation& p) {
  std::vector<RowRange> out;
  int lo = 1;
  int prefix_max = 0;
  for (int k = 1; k <= p.size(); ++k) {
    prefix_max = std::max(prefix_max, p(k));
    if (prefix_max == k) {
      out.push_back({lo, k});
      lo = k + 1;
    }
  }
  return out;
}

/// The section occupying rows r.lo..r.hi, renumbered to 1..length.
inline Permutation section_of(const Permutation& p, RowRange r) {
  std::vector<int> v;
  v.reserve(static_cast<std::size_t>(r.length()));
  for (int i = r.lo; i <= r.hi; ++i) {
    const int c = p(i) - r.lo + 1;
    if (c < 1 || c > r.length())
      throw PreconditionError("rows " + format(r) + " do not form a section");
    v.push_back(c);
  }
  return Permutation::from_trusted(std::move(v));
}

struct Inversions {
  std::int64_t count = 0;
  /// (i, j) with i < j and sigma(i) > sigma(j).
  std::vector<std::pair<int, int>> index_pairs;
  /// (sigma(i), sigma(i+1)) for every adjacent inverted pair, larger value first.
  std::vector<std::pair<int, int>> adjacent_value_pairs;
};

inline Inversions inversions(const Permutation& p) {
  Inversions out;
  const int n = p.size();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (p(i) > p(j)) out.index_pairs.emplace_back(i, j);
  out.count = static_cast<std::int64_t>(out.index_pairs.size());
  for (int i = 1; i < n; ++i)
    if (p(i) > p(i + 1)) out.adjacent_value_pairs.emplace_back(p(i), p(i + 1));
  return out;
}

inline std::int64_t inversion_count(const Permutation& p) {
  std::int64_t c = 0;
  for (int i = 1; i <= p.size(); ++i)
    for (int j = i + 1; j <= p.size(); ++j) c += p(i) > p(j) ? 1 : 0;
  return c;
}

/// Maximal runs of >= 2 consecutive rows on which sigma strictly decreases.
inline std::vector<RowRange> inverted_blocks(const Permutation& p) {
  std::vector<RowRange> out;
  const int n = p.size();
  int i = 1;
  while (i <= n) {
    int j = i;
    while (j < n && p(j) > p(j + 1)) ++j;
    if (j > i) out.push_back({i, j});
    i = j + 1;
  }
  return out;
}

/// Smallest range of consecutive rows holding row m and every row inverted
/// with it; [m..m] when no row is inverted with m.
inline RowRange invert_rows(int m, const Permutation& p) {
  if (m < 1 || m > p.size())
    throw PreconditionError("row " + std::to_string(m) + " outside 1.." +
                            std::to_string(p.size()));
  RowRange r{m, m};
  for (int j = 1; j < m; ++j)
    if (p(j) > p(m)) {
      r.lo = j;
      break;
    }
  for (int j = p.size(); j > m; --j)
    if (p(j) < p(m)) {
      r.hi = j;
      break;
    }
  return r;
}

/// Number of rows that overtake row m: over all rows r inverted with m,
/// counts those for which r (not m) is the overtaker. For an inverted pair
/// with upper row u and lower row l, u overtakes when u is positive and l is
/// not negative, l overtakes when u is not positive and l is negative, and a
/// reducing pair (u positive, l negative) has no overtaker.
inline std::vector<int> overtaker_counts(const Permutation& p) {
  const int n = p.size();
  std::vector<int> ov(static_cast<std::size_t>(n), 0);
  for (int u = 1; u <= n; ++u) {
    for (int l = u + 1; l <= n; ++l) {
      if (p(u) < p(l)) continue;
      const bool up = row_sign(p, u) == Sign::positive;
      const bool ln = row_sign(p, l) == Sign::negative;
      if (up && ln) continue;
      if (up)
        ++ov[l - 1];
      else
        ++ov[u - 1];
    }
  }
  return ov;
}

struct DistanceTable {
  /// entries[i-1] = sigma(i) - i.
  std::vector<int> entries;

  std::int64_t l1() const {
    std::int64_t s = 0;
    for (int e : entries) s += std::abs(e);
    return s;
  }
  /// Squared Euclidean norm; exact, so comparisons need no tolerance.
  std::int64_t l2_squared() const {
    std::int64_t s = 0;
    for (int e : entries) s += static_cast<std::int64_t>(e) * e;
    return s;
  }
  double l2() const { return std::sqrt(static_cast<double>(l2_squared())); }
  int linf() const {
    int m = 0;
    for (int e : entries) m = std::max(m, std::abs(e));
    return m;
  }
};

inline DistanceTable distance_table(const Permutation& p) {
  DistanceTable d;
  d.entries.reserve(static_cast<std::size_t>(p.size()));
  for (int i = 1; i <= p.size(); ++i) d.entries.push_back(p(i) - i);
  return d;
}

}  // namespace bandperm
