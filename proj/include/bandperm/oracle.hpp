#pragma once

// Ground truth for the minimal number of bandwidth-1 factors: breadth-first
// search on the Cayley graph of S_n whose connection set is every nonidentity
// bandwidth-1 permutation.

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bandperm/error.hpp"
#include "bandperm/factorize.hpp"
#include "bandperm/permutation.hpp"
#include "bandperm/ranking.hpp"
#include "bandperm/swap_set.hpp"

namespace bandperm {

inline constexpr int kMaxOracleSize = 9;
inline constexpr int kMaxGreedyChainSize = 7;

/// Every nonempty swap set of size n, in lexicographic order.
inline std::vector<SwapSet> generators(int n) {
  if (n < 1) throw PreconditionError("generators: size must be positive");
  std::vector<SwapSet> out;
  std::vector<int> chosen;
  auto recurse = [&](auto&& self, int next) -> void {
    if (!chosen.empty()) out.emplace_back(n, chosen);
    for (int s = next; s <= n - 1; ++s) {
      chosen.push_back(s);
      self(self, s + 2);
      chosen.pop_back();
    }
  };
  recurse(recurse, 1);
  return out;
}

/// Minimal factor count for every permutation of one size, indexed by rank.
class DistanceMap {
 public:
  int size() const noexcept { return n_; }
  std::size_t entries() const noexcept { return dist_.size(); }

  int at_rank(std::uint64_t r) const { return dist_.at(r); }

  int at(const Permutation& p) const {
    if (p.size() != n_)
      throw SizeMismatch("distance map of size " + std::to_string(n_) +
                         " queried with permutation of size " + std::to_string(p.size()));
    return dist_[rank_of(p)];
  }

  int diameter() const {
    return dist_.empty() ? 0 : *std::max_element(dist_.begin(), dist_.end());
  }

  /// histogram()[d] = number of permutations at distance d.
  std::vector<std::uint64_t> histogram() const {
    std::vector<std::uint64_t> h(static_cast<std::size_t>(diameter()) + 1, 0);
    for (std::uint8_t d : dist_) ++h[d];
    return h;
  }

 private:
  friend DistanceMap bfs_all(int n);
  int n_ = 0;
  std::vector<std::uint8_t> dist_;
};

/// Breadth-first search from the identity, multiplying by generators on the
/// right. One byte per permutation.
inline DistanceMap bfs_all(int n) {
  if (n < 1 || n > kMaxOracleSize)
    throw ResourceError("bfs_all: n must be in 1.." + std::to_string(kMaxOracleSize));
  constexpr std::uint8_t kUnseen = 0xFF;
  DistanceMap m;
  m.n_ = n;
  m.dist_.assign(factorial(n), kUnseen);

  // Right multiplication by g relabels values: (X g)(i) = g(X(i)).
  std::vector<std::array<int, kMaxOracleSize + 1>> relabel;
  for (const SwapSet& g : generators(n)) {
    std::array<int, kMaxOracleSize + 1> t{};
    const Permutation gp = g.to_permutation();
    for (int v = 1; v <= n; ++v) t[v] = gp(v);
    relabel.push_back(t);
  }

  std::vector<std::uint32_t> frontier{0};  // rank 0 is the identity
  std::vector<std::uint32_t> next;
  m.dist_[0] = 0;
  std::array<int, kMaxOracleSize> cur{};
  std::array<int, kMaxOracleSize> nb{};
  const std::span<int> cur_span(cur.data(), static_cast<std::size_t>(n));
  for (std::uint8_t d = 0; !frontier.empty(); ++d) {
    next.clear();
    for (std::uint32_t r : frontier) {
      unrank_into(r, cur_span);
      for (const auto& t : relabel) {
        for (int i = 0; i < n; ++i) nb[i] = t[cur[i]];
        const auto rr = rank_of(std::span<const int>(nb.data(), static_cast<std::size_t>(n)));
        if (m.dist_[rr] == kUnseen) {
          m.dist_[rr] = static_cast<std::uint8_t>(d + 1);
          next.push_back(static_cast<std::uint32_t>(rr));
        }
      }
    }
    frontier.swap(next);
  }
  return m;
}

inline int opfactors(const Permutation& p, const DistanceMap& m) { return m.at(p); }

/// Minimal factor count of a single permutation by bidirectional search,
/// multiplying by generators on the left (row swaps). Independent of bfs_all.
inline int opfactors(const Permutation& p) {
  const int n = p.size();
  if (n > kMaxOracleSize)
    throw ResourceError("opfactors: n must be <= " + std::to_string(kMaxOracleSize));
  if (p.is_identity()) return 0;
  const std::vector<SwapSet> gens = generators(n);

  using Layer = std::vector<Permutation>;
  std::unordered_map<std::uint64_t, int> seen[2];
  Layer frontier[2] = {{p}, {Permutation::identity(n)}};
  seen[0][rank_of(p)] = 0;
  seen[1][0] = 0;
  int depth[2] = {0, 0};
  while (!frontier[0].empty() && !frontier[1].empty()) {
    const int side = frontier[0].size() <= frontier[1].size() ? 0 : 1;
    const int other = 1 - side;
    Layer next;
    int best = -1;
    for (const Permutation& x : frontier[side]) {
      for (const SwapSet& g : gens) {
        Permutation y = apply_swapset(g, x);
        const auto r = rank_of(y);
        if (auto it = seen[other].find(r); it != seen[other].end()) {
          const int total = depth[side] + 1 + it->second;
          if (best < 0 || total < best) best = total;
        }
        if (seen[side].emplace(r, depth[side] + 1).second) next.push_back(std::move(y));
      }
    }
    if (best >= 0) return best;
    ++depth[side];
    frontier[side] = std::move(next);
  }
  throw InternalError("opfactors: search exhausted without meeting");
}

struct GreedyBounds {
  int longest = 0;
  int shortest = 0;
  friend bool operator==(const GreedyBounds&, const GreedyBounds&) = default;
};

/// Longest and shortest chains P_k = G_k P_{k-1} with G_k a greedy bubble
/// matrix of P_{k-1}, over all such chains ending at the identity. Memoized
/// depth-first search; the memo persists across calls.
class GreedyChainExplorer {
 public:
  GreedyBounds bounds(const Permutation& p) {
    if (p.size() > kMaxGreedyChainSize)
      throw ResourceError("greedy_chain_bounds: n must be <= " +
                          std::to_string(kMaxGreedyChainSize));
    return visit(p);
  }

 private:
  GreedyBounds visit(const Permutation& p) {
    if (p.is_identity()) return {0, 0};
    const std::uint64_t key = rank_of(p) * 32 + static_cast<std::uint64_t>(p.size());
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    GreedyBounds b{0, -1};
    for (const SwapSet& g : greedy_bubble_sets(p)) {
      const GreedyBounds sub = visit(apply_swapset(g, p));
      b.longest = std::max(b.longest, sub.longest + 1);
      b.shortest = b.shortest < 0 ? sub.shortest + 1 : std::min(b.shortest, sub.shortest + 1);
    }
    memo_.emplace(key, b);
    return b;
  }

  std::unordered_map<std::uint64_t, GreedyBounds> memo_;
};

inline GreedyBounds greedy_chain_bounds(const Permutation& p) {
  GreedyChainExplorer e;
  return e.bounds(p);
}

}  // namespace bandperm
