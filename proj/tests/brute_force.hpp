#pragma once

// Slow, definition-level reimplementations used as independent oracles.
// Nothing here calls into the library beyond the value types.

#include <algorithm>
#include <cstdint>
#include <map>
#include <queue>
#include <set>
#include <utility>
#include <vector>

#include "bandperm/permutation.hpp"
#include "bandperm/swap_set.hpp"

namespace brute {

using Matrix = std::vector<std::vector<int>>;

inline Matrix dense(const std::vector<int>& sigma) {
  const std::size_t n = sigma.size();
  Matrix m(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][sigma[i] - 1] = 1;
  return m;
}

inline Matrix multiply(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  Matrix c(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (a[i][k])
        for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

inline std::vector<int> one_line(const bandperm::Permutation& p) {
  return {p.one_line().begin(), p.one_line().end()};
}

// Swap matrix of a set of left indices, as a dense 0/1 matrix.
inline Matrix swap_matrix(int n, const std::vector<int>& positions) {
  std::vector<int> sigma(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) sigma[i] = i + 1;
  for (int s : positions) std::swap(sigma[s - 1], sigma[s]);
  return dense(sigma);
}

inline std::vector<int> apply_swaps(const std::vector<int>& positions, std::vector<int> sigma) {
  for (int s : positions) std::swap(sigma[s - 1], sigma[s]);
  return sigma;
}

inline int sgn(int x) { return (x > 0) - (x < 0); }

// Every subset of {1..n-1} with no two consecutive members.
inline std::vector<std::vector<int>> all_swap_sets(int n) {
  std::vector<std::vector<int>> out;
  const int m = std::max(0, n - 1);
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    if (mask & (mask >> 1)) continue;
    std::vector<int> s;
    for (int b = 0; b < m; ++b)
      if (mask & (1u << b)) s.push_back(b + 1);
    out.push_back(s);
  }
  return out;
}

inline bool adjacent_inverted(const std::vector<int>& sigma, int s) {
  return sigma[s - 1] > sigma[s];
}

// Value pairs (a above b, a > b) standing on adjacent rows.
inline std::set<std::pair<int, int>> adjacent_inverted_values(const std::vector<int>& sigma) {
  std::set<std::pair<int, int>> out;
  for (std::size_t i = 0; i + 1 < sigma.size(); ++i)
    if (sigma[i] > sigma[i + 1]) out.insert({sigma[i], sigma[i + 1]});
  return out;
}

// Maximal strictly decreasing runs of at least two rows, 1-based [lo, hi].
inline std::vector<std::pair<int, int>> decreasing_runs(const std::vector<int>& sigma) {
  std::vector<std::pair<int, int>> out;
  const int n = static_cast<int>(sigma.size());
  int lo = 1;
  for (int i = 1; i <= n; ++i) {
    if (i == n || sigma[i - 1] < sigma[i]) {
      if (i > lo) out.push_back({lo, i});
      lo = i + 1;
    }
  }
  return out;
}

inline std::vector<int> reducing_positions(const std::vector<int>& sigma) {
  std::vector<int> out;
  for (std::size_t i = 0; i + 1 < sigma.size(); ++i) {
    const int up = sgn(sigma[i] - static_cast<int>(i + 1));
    const int down = sgn(sigma[i + 1] - static_cast<int>(i + 2));
    if (up > 0 && down < 0) out.push_back(static_cast<int>(i + 1));
  }
  return out;
}

// Opportunistic-overtaking sets by the subset conditions: swaps only on
// adjacent inverted pairs, every reducing swap present, every interior row
// of each decreasing run moved, and at least one swap in every run.
inline std::vector<std::vector<int>> oo_sets(const std::vector<int>& sigma) {
  const int n = static_cast<int>(sigma.size());
  const auto runs = decreasing_runs(sigma);
  const auto red = reducing_positions(sigma);
  std::vector<std::vector<int>> out;
  for (const auto& s : all_swap_sets(n)) {
    bool ok = true;
    for (int pos : s) ok = ok && adjacent_inverted(sigma, pos);
    for (int r : red) ok = ok && std::find(s.begin(), s.end(), r) != s.end();
    auto moved = [&](int row) {
      return std::find(s.begin(), s.end(), row) != s.end() ||
             std::find(s.begin(), s.end(), row - 1) != s.end();
    };
    for (const auto& [lo, hi] : runs) {
      for (int row = lo + 1; row < hi; ++row) ok = ok && moved(row);
      bool any = false;
      for (int pos : s) any = any || (lo <= pos && pos < hi);
      ok = ok && any;
    }
    if (ok) out.push_back(s);
  }
  if (runs.empty()) out = {{}};
  std::sort(out.begin(), out.end());
  return out;
}

// Greedy bubble sets by definition: nonempty swaps on adjacent inverted
// pairs such that no value pair is adjacent-and-inverted both before and
// after.
inline std::vector<std::vector<int>> greedy_sets(const std::vector<int>& sigma) {
  const int n = static_cast<int>(sigma.size());
  const auto before = adjacent_inverted_values(sigma);
  if (before.empty()) return {{}};
  std::vector<std::vector<int>> out;
  for (const auto& s : all_swap_sets(n)) {
    if (s.empty()) continue;
    bool ok = true;
    for (int pos : s) ok = ok && adjacent_inverted(sigma, pos);
    if (!ok) continue;
    for (const auto& pr : adjacent_inverted_values(apply_swaps(s, sigma)))
      ok = ok && !before.count(pr);
    if (ok) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool is_identity(const std::vector<int>& sigma) {
  for (std::size_t i = 0; i < sigma.size(); ++i)
    if (sigma[i] != static_cast<int>(i + 1)) return false;
  return true;
}

// Longest and shortest greedy chain by plain recursion.
inline std::pair<int, int> greedy_chain(const std::vector<int>& sigma) {
  if (is_identity(sigma)) return {0, 0};
  int longest = 0;
  int shortest = 1 << 20;
  for (const auto& s : greedy_sets(sigma)) {
    const auto [lo, sh] = greedy_chain(apply_swaps(s, sigma));
    longest = std::max(longest, lo + 1);
    shortest = std::min(shortest, sh + 1);
  }
  return {longest, shortest};
}

// Minimal factor count by plain BFS from sigma with a std::map.
inline int min_factors(const std::vector<int>& sigma) {
  const int n = static_cast<int>(sigma.size());
  std::vector<std::vector<int>> gens;
  for (auto& s : all_swap_sets(n))
    if (!s.empty()) gens.push_back(s);
  std::map<std::vector<int>, int> dist{{sigma, 0}};
  std::queue<std::vector<int>> q;
  q.push(sigma);
  while (!q.empty()) {
    auto cur = q.front();
    q.pop();
    if (is_identity(cur)) return dist[cur];
    for (const auto& g : gens) {
      auto nb = apply_swaps(g, cur);
      if (dist.emplace(nb, dist[cur] + 1).second) q.push(nb);
    }
  }
  return -1;
}

// Lexicographic index by counting predecessors with std::next_permutation.
inline std::uint64_t lex_index(const std::vector<int>& sigma) {
  std::vector<int> v(sigma.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = static_cast<int>(i + 1);
  std::uint64_t idx = 0;
  while (v != sigma) {
    std::next_permutation(v.begin(), v.end());
    ++idx;
  }
  return idx;
}

inline std::uint64_t fibonacci(int n) {
  std::uint64_t a = 1;  // F_0
  std::uint64_t b = 1;  // F_1
  for (int i = 2; i <= n; ++i) {
    const std::uint64_t c = a + b;
    a = b;
    b = c;
  }
  return n == 0 ? a : b;
}

}  // namespace brute
