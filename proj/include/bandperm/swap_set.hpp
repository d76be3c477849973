#pragma once

#include <algorithm>
#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bandperm/error.hpp"
#include "bandperm/permutation.hpp"

namespace bandperm {

/// A bandwidth-1 permutation matrix of size n, stored as the sorted left
/// indices s of its adjacent transpositions (s, s+1). Positions are pairwise
/// at distance >= 2, so the transpositions are disjoint.
class SwapSet {
 public:
  /// The empty swap set (identity) of size n.
  explicit SwapSet(int n) : n_(n) {
    if (n < 1) throw PreconditionError("swap set size must be positive");
  }

  SwapSet(int n, std::vector<int> positions) : n_(n), positions_(std::move(positions)) {
    if (n < 1) throw PreconditionError("swap set size must be positive");
    std::sort(positions_.begin(), positions_.end());
    for (std::size_t i = 0; i < positions_.size(); ++i) {
      const int s = positions_[i];
      if (s < 1 || s > n - 1)
        throw MalformedInput("swap position " + std::to_string(s) + " outside 1.." +
                             std::to_string(n - 1));
      if (i > 0 && s - positions_[i - 1] < 2)
        throw MalformedInput("swap positions " + std::to_string(positions_[i - 1]) +
                             " and " + std::to_string(s) + " overlap");
    }
  }

  int size() const noexcept { return n_; }
  std::span<const int> positions() const noexcept { return positions_; }
  std::size_t count() const noexcept { return positions_.size(); }
  bool empty() const noexcept { return positions_.empty(); }

  bool contains(int s) const {
    return std::binary_search(positions_.begin(), positions_.end(), s);
  }

  /// True when row r is exchanged by one of the swaps.
  bool moves_row(int r) const { return contains(r) || contains(r - 1); }

  Permutation to_permutation() const {
    std::vector<int> v(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) v[i] = i + 1;
    for (int s : positions_) std::swap(v[s - 1], v[s]);
    return Permutation::from_trusted(std::move(v));
  }

  friend bool operator==(const SwapSet&, const SwapSet&) = default;
  /// Orders by matrix size, then lexicographically by positions.
  friend auto operator<=>(const SwapSet&, const SwapSet&) = default;

 private:
  int n_;
  std::vector<int> positions_;
};

/// Exchanges rows s and s+1 of p for every s in the set, i.e. returns S*P.
inline Permutation apply_swapset(const SwapSet& s, const Permutation& p) {
  if (s.size() != p.size())
    throw SizeMismatch("swap set of size " + std::to_string(s.size()) +
                       " applied to permutation of size " + std::to_string(p.size()));
  std::vector<int> v(p.one_line().begin(), p.one_line().end());
  for (int pos : s.positions()) std::swap(v[pos - 1], v[pos]);
  return Permutation::from_trusted(std::move(v));
}

/// "1 3" -> swaps (1,2) and (3,4) in a matrix of size n.
inline SwapSet parse_swapset(std::string_view text, int n) {
  std::vector<int> positions;
  try {
    positions = parse_int_list(text);
  } catch (const MalformedPermutation& e) {
    throw MalformedInput(std::string("swap set: ") + e.what());
  }
  return SwapSet(n, std::move(positions));
}

inline std::string format(const SwapSet& s) {
  std::string out;
  for (int pos : s.positions()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(pos);
  }
  return out;
}

}  // namespace bandperm
