#pragma once

// Inserting and deleting fixed points, and removing the sign of a row.

#include <string>
#include <utility>
#include <vector>

#include "bandperm/error.hpp"
#include "bandperm/permutation.hpp"

namespace bandperm {

/// Inserts a neutral row and column at index m (1 <= m <= n+1). Rows and
/// columns with index >= m move up by one.
inline Permutation insert_fix(int m, const Permutation& p) {
  const int n = p.size();
  if (m < 1 || m > n + 1)
    throw PreconditionError("insert_fix: position " + std::to_string(m) +
                            " outside 1.." + std::to_string(n + 1));
  std::vector<int> v;
  v.reserve(static_cast<std::size_t>(n) + 1);
  auto shifted = [m](int c) { return c >= m ? c + 1 : c; };
  for (int i = 1; i < m; ++i) v.push_back(shifted(p(i)));
  v.push_back(m);
  for (int i = m; i <= n; ++i) v.push_back(shifted(p(i)));
  return Permutation::from_trusted(std::move(v));
}

/// Removes row m and column m; requires sigma(m) = m and n >= 2.
inline Permutation delete_fix(int m, const Permutation& p) {
  const int n = p.size();
  if (m < 1 || m > n)
    throw PreconditionError("delete_fix: row " + std::to_string(m) + " outside 1.." +
                            std::to_string(n));
  if (p(m) != m)
    throw PreconditionError("delete_fix: row " + std::to_string(m) + " is not neutral");
  if (n == 1) throw PreconditionError("delete_fix: cannot delete the only row");
  std::vector<int> v;
  v.reserve(static_cast<std::size_t>(n) - 1);
  for (int i = 1; i <= n; ++i)
    if (i != m) v.push_back(p(i) > m ? p(i) - 1 : p(i));
  return Permutation::from_trusted(std::move(v));
}

/// Deletes every fixed point, highest index first. Requires a nonidentity P.
inline Permutation essence(const Permutation& p) {
  if (p.is_identity()) throw PreconditionError("essence of the identity is undefined");
  Permutation out = p;
  for (int r = p.size(); r >= 1; --r)
    if (p(r) == r) out = delete_fix(r, out);
  return out;
}

/// With m' the row whose 1 is in column m: row m' takes old row m and row m
/// becomes neutral. Equivalently sigma composed with the transposition (m m').
inline Permutation unsign_row(int m, const Permutation& p) {
  if (m < 1 || m > p.size())
    throw PreconditionError("unsign_row: row " + std::to_string(m) + " outside 1.." +
                            std::to_string(p.size()));
  if (p(m) == m)
    throw PreconditionError("unsign_row: row " + std::to_string(m) + " is neutral");
  std::vector<int> v(p.one_line().begin(), p.one_line().end());
  int m_prime = 1;
  while (p(m_prime) != m) ++m_prime;
  v[m_prime - 1] = p(m);
  v[m - 1] = m;
  return Permutation::from_trusted(std::move(v));
}

}  // namespace bandperm
