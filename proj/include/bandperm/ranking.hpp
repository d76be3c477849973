#pragma once

// Factorial-number-system (Lehmer code) ranking. Rank order coincides with
// lexicographic order of the one-line notation.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "bandperm/error.hpp"
#include "bandperm/permutation.hpp"

namespace bandperm {

inline constexpr int kMaxRankedSize = 20;

inline std::uint64_t factorial(int n) {
  if (n < 0 || n > kMaxRankedSize)
    throw ResourceError("factorial(" + std::to_string(n) + ") out of range");
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

/// Rank of a one-line sequence over {1..n} in [0, n!).
inline std::uint64_t rank_of(std::span<const int> one_line) {
  const int n = static_cast<int>(one_line.size());
  std::uint64_t r = 0;
  for (int i = 0; i < n; ++i) {
    int smaller_after = 0;
    for (int j = i + 1; j < n; ++j) smaller_after += one_line[j] < one_line[i] ? 1 : 0;
    r = r * static_cast<std::uint64_t>(n - i) + static_cast<std::uint64_t>(smaller_after);
  }
  return r;
}

inline std::uint64_t rank_of(const Permutation& p) { return rank_of(p.one_line()); }

/// Writes the permutation of rank r into `out` (size n).
inline void unrank_into(std::uint64_t r, std::span<int> out) {
  const int n = static_cast<int>(out.size());
  // Lehmer digits, least significant last.
  for (int i = n - 1; i >= 0; --i) {
    const auto base = static_cast<std::uint64_t>(n - i);
    out[i] = static_cast<int>(r % base);
    r /= base;
  }
  // Each digit counts the unused values smaller than the chosen one.
  std::uint32_t used = 0;
  for (int i = 0; i < n; ++i) {
    int d = out[i];
    int v = 0;
    for (;; ++v) {
      if (used & (1u << v)) continue;
      if (d == 0) break;
      --d;
    }
    used |= 1u << v;
    out[i] = v + 1;
  }
}

inline Permutation unrank(int n, std::uint64_t r) {
  if (n < 1 || n > kMaxRankedSize) throw ResourceError("unrank: unsupported size");
  if (r >= factorial(n)) throw PreconditionError("unrank: rank out of range");
  std::vector<int> v(static_cast<std::size_t>(n));
  unrank_into(r, v);
  return Permutation::from_trusted(std::move(v));
}

/// Calls fn(const Permutation&) for every permutation of size n in rank order.
template <class Fn>
void for_each_permutation(int n, Fn&& fn) {
  if (n < 1) throw PreconditionError("for_each_permutation: size must be positive");
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  do {
    fn(Permutation::from_trusted(v));
  } while (std::next_permutation(v.begin(), v.end()));
}

}  // namespace bandperm
