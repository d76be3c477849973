#pragma once

// Greedy "parallel bubblesort" factorization of a permutation matrix into
// bandwidth-1 factors. Every engine picks a swap set B_k acting only on
// adjacent inverted pairs of the current state and sets P_k = B_k P_{k-1}
// until the identity is reached; then P = B_1 B_2 ... B_m.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bandperm/error.hpp"
#include "bandperm/permutation.hpp"
#include "bandperm/structure.hpp"
#include "bandperm/swap_set.hpp"

namespace bandperm {

enum class GreedyRule {
  /// The first greedy bubble set in enumeration (lexicographic) order.
  first_in_enumeration,
  /// The set with the most swaps; ties go to the lexicographically smallest.
  min_resulting_inversions,
};

struct Policy {
  enum class Kind { reducing_only, opportunistic_overtaking, greedy_bubble };

  Kind kind = Kind::opportunistic_overtaking;
  GreedyRule rule = GreedyRule::min_resulting_inversions;

  static Policy reducing() { return {Kind::reducing_only, GreedyRule::min_resulting_inversions}; }
  static Policy oo() { return {Kind::opportunistic_overtaking, GreedyRule::min_resulting_inversions}; }
  static Policy greedy(GreedyRule r = GreedyRule::min_resulting_inversions) {
    return {Kind::greedy_bubble, r};
  }

  friend bool operator==(const Policy&, const Policy&) = default;
};

inline std::string to_string(const Policy& p) {
  switch (p.kind) {
    case Policy::Kind::reducing_only: return "reducing";
    case Policy::Kind::opportunistic_overtaking: return "oo";
    case Policy::Kind::greedy_bubble:
      return p.rule == GreedyRule::first_in_enumeration ? "greedy-first" : "greedy";
  }
  return "?";
}

/// Accepts "reducing", "oo", "greedy" (= "greedy-min") and "greedy-first".
inline Policy parse_policy(std::string_view s) {
  if (s == "reducing") return Policy::reducing();
  if (s == "oo") return Policy::oo();
  if (s == "greedy" || s == "greedy-min") return Policy::greedy();
  if (s == "greedy-first") return Policy::greedy(GreedyRule::first_in_enumeration);
  throw MalformedInput("unknown policy '" + std::string(s) + "'");
}

/// Thrown when a policy cannot continue from a nonidentity state.
class PolicyNotApplicable : public Error {
 public:
  PolicyNotApplicable(const std::string& what, Permutation stuck)
      : Error(what), stuck_(std::move(stuck)) {}
  const Permutation& stuck_state() const noexcept { return stuck_; }

 private:
  Permutation stuck_;
};

struct FactorChain {
  Permutation input;
  /// B_1 ... B_m.
  std::vector<SwapSet> factors;
  /// P_0 = input, ..., P_m.
  std::vector<Permutation> states;

  int length() const noexcept { return static_cast<int>(factors.size()); }

  friend bool operator==(const FactorChain&, const FactorChain&) = default;
};

/// Swaps every adjacent pair whose upper row is positive and lower row is
/// negative. Such pairs never overlap.
inline SwapSet reducing_matrix(const Permutation& p) {
  std::vector<int> pos;
  for (int s = 1; s < p.size(); ++s)
    if (row_sign(p, s) == Sign::positive && row_sign(p, s + 1) == Sign::negative)
      pos.push_back(s);
  return SwapSet(p.size(), std::move(pos));
}

namespace detail {

// Position of the reducible pair inside an inverted block, if any. Signs are
// monotone along a strictly decreasing run, so there is at most one.
inline std::optional<int> reducible_pair_in(const Permutation& p, RowRange b) {
  for (int m = b.lo; m < b.hi; ++m)
    if (row_sign(p, m) == Sign::positive && row_sign(p, m + 1) == Sign::negative) return m;
  return std::nullopt;
}

inline void append_alternating(std::vector<int>& out, int start, RowRange b) {
  for (int m = start; m + 1 <= b.hi; m += 2) out.push_back(m);
}

}  // namespace detail

/// Deterministic opportunistic-overtaking matrix. In each inverted block:
/// anchor at the reducible pair (stepped up by two while still inside the
/// block) or at the top row when there is none, then swap every other pair
/// downward from the anchor.
inline SwapSet opportunistic_overtaking(const Permutation& p) {
  std::vector<int> pos;
  for (const RowRange& b : inverted_blocks(p)) {
    int m = b.lo;
    if (auto red = detail::reducible_pair_in(p, b)) {
      m = *red;
      while (m - 2 >= b.lo) m -= 2;
    }
    detail::append_alternating(pos, m, b);
  }
  return SwapSet(p.size(), std::move(pos));
}

/// Every opportunistic-overtaking matrix of P, sorted. Per inverted block the
/// candidates are the two alternating matchings anchored at the block's first
/// or second row; a matching must be nonempty and contain the block's
/// reducible pair when there is one.
inline std::vector<SwapSet> enumerate_oo(const Permutation& p) {
  std::vector<std::vector<int>> combos{{}};
  for (const RowRange& b : inverted_blocks(p)) {
    const auto red = detail::reducible_pair_in(p, b);
    std::vector<std::vector<int>> options;
    for (int start : {b.lo, b.lo + 1}) {
      std::vector<int> opt;
      detail::append_alternating(opt, start, b);
      if (opt.empty()) continue;
      if (red && (*red - start) % 2 != 0) continue;
      options.push_back(std::move(opt));
    }
    std::vector<std::vector<int>> next;
    for (const auto& c : combos)
      for (const auto& o : options) {
        std::vector<int> merged = c;
        merged.insert(merged.end(), o.begin(), o.end());
        next.push_back(std::move(merged));
      }
    combos = std::move(next);
  }
  std::vector<SwapSet> out;
  out.reserve(combos.size());
  for (auto& c : combos) out.emplace_back(p.size(), std::move(c));
  std::sort(out.begin(), out.end());
  return out;
}

/// Every swap set S of adjacent inverted pairs of P such that each adjacent
/// inverted pair of P has at least one of its rows moved by S. Equivalently,
/// no pair of rows is adjacent and inverted in both P and S*P. Sorted.
inline std::vector<SwapSet> greedy_bubble_sets(const Permutation& p) {
  const int n = p.size();
  std::vector<int> candidates;
  for (int s = 1; s < n; ++s)
    if (p(s) > p(s + 1)) candidates.push_back(s);
  if (candidates.empty()) return {SwapSet(n)};

  std::vector<SwapSet> out;
  std::vector<int> chosen;
  std::vector<bool> moved(static_cast<std::size_t>(n) + 2, false);
  auto covered = [&] {
    for (int s : candidates)
      if (!moved[s] && !moved[s + 1]) return false;
    return true;
  };
  auto recurse = [&](auto&& self, std::size_t i) -> void {
    if (i == candidates.size()) {
      if (covered()) out.emplace_back(n, chosen);
      return;
    }
    self(self, i + 1);
    const int s = candidates[i];
    if (!chosen.empty() && s - chosen.back() < 2) return;
    chosen.push_back(s);
    moved[s] = moved[s + 1] = true;
    self(self, i + 1);
    moved[s] = moved[s + 1] = false;
    chosen.pop_back();
  };
  recurse(recurse, 0);
  std::sort(out.begin(), out.end());
  return out;
}

inline SwapSet select_greedy(const std::vector<SwapSet>& sets, GreedyRule rule) {
  if (sets.empty()) throw InternalError("no greedy bubble set to select from");
  if (rule == GreedyRule::first_in_enumeration) return sets.front();
  const SwapSet* best = &sets.front();
  for (const SwapSet& s : sets)
    if (s.count() > best->count()) best = &s;
  return *best;
}

/// The factor a policy applies to state p (empty when p is the identity or
/// the policy is stuck).
inline SwapSet next_factor(const Permutation& p, const Policy& policy) {
  switch (policy.kind) {
    case Policy::Kind::reducing_only: return reducing_matrix(p);
    case Policy::Kind::opportunistic_overtaking: return opportunistic_overtaking(p);
    case Policy::Kind::greedy_bubble:
      return select_greedy(greedy_bubble_sets(p), policy.rule);
  }
  throw InternalError("unknown policy");
}

/// Runs a policy to the identity. The reducing-only policy is guaranteed to
/// finish on Strang canonical matrices whose nontrivial sections are
/// tracefree; on other inputs it may stall, which raises PolicyNotApplicable.
inline FactorChain factorize(const Permutation& p, const Policy& policy) {
  FactorChain chain{p, {}, {p}};
  const int cap = p.size() * p.size();
  Permutation current = p;
  while (!current.is_identity()) {
    if (chain.length() >= cap)
      throw InternalError("factorize: exceeded " + std::to_string(cap) + " iterations on " +
                          format(p));
    SwapSet b = next_factor(current, policy);
    if (b.empty())
      throw PolicyNotApplicable("policy '" + to_string(policy) + "' is stuck at " +
                                    format(current),
                                current);
    current = apply_swapset(b, current);
    chain.factors.push_back(std::move(b));
    chain.states.push_back(current);
  }
  return chain;
}

// ---------------------------------------------------------------------------
// Verification

enum class CheckKind {
  shape,
  initial_state,
  size_mismatch,
  empty_factor,
  non_inverted_swap,
  state_mismatch,
  inversion_drop,
  l1_increase,
  linf_increase,
  l2_not_decreasing,
  not_identity,
  product_mismatch,
};

inline std::string to_string(CheckKind k) {
  switch (k) {
    case CheckKind::shape: return "shape";
    case CheckKind::initial_state: return "initial-state";
    case CheckKind::size_mismatch: return "size-mismatch";
    case CheckKind::empty_factor: return "empty-factor";
    case CheckKind::non_inverted_swap: return "non-inverted-swap";
    case CheckKind::state_mismatch: return "state-mismatch";
    case CheckKind::inversion_drop: return "inversion-drop";
    case CheckKind::l1_increase: return "l1-increase";
    case CheckKind::linf_increase: return "linf-increase";
    case CheckKind::l2_not_decreasing: return "l2-not-decreasing";
    case CheckKind::not_identity: return "not-identity";
    case CheckKind::product_mismatch: return "product-mismatch";
  }
  return "?";
}

struct Violation {
  CheckKind kind;
  /// 1-based factor index; 0 for whole-chain checks.
  int step;
  std::string message;
};

struct VerificationReport {
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }
  bool has(CheckKind k) const {
    return std::any_of(violations.begin(), violations.end(),
                       [k](const Violation& v) { return v.kind == k; });
  }
  /// Earliest violation by step; whole-chain checks come first.
  const Violation* first() const {
    if (violations.empty()) return nullptr;
    return &*std::min_element(violations.begin(), violations.end(),
                              [](const Violation& a, const Violation& b) { return a.step < b.step; });
  }
};

/// Re-checks every chain invariant: consistent states, swaps only on
/// adjacent inverted pairs, inversion count dropping by |B_k|, l1 and
/// l-infinity norms of the distance table non-increasing and l2 strictly
/// decreasing, final identity and B_1 ... B_m = input.
inline VerificationReport verify_chain(const FactorChain& c) {
  VerificationReport rep;
  auto fail = [&](CheckKind k, int step, std::string msg) {
    rep.violations.push_back({k, step, std::move(msg)});
  };
  const int n = c.input.size();
  const int m = c.length();

  for (int k = 1; k <= m; ++k)
    if (c.factors[k - 1].size() != n)
      fail(CheckKind::size_mismatch, k,
           "factor has size " + std::to_string(c.factors[k - 1].size()) + ", expected " +
               std::to_string(n));
  for (std::size_t i = 0; i < c.states.size(); ++i)
    if (c.states[i].size() != n)
      fail(CheckKind::size_mismatch, static_cast<int>(i),
           "state has size " + std::to_string(c.states[i].size()));
  if (!rep.ok()) return rep;

  std::vector<Permutation> states = c.states;
  if (static_cast<int>(states.size()) != m + 1) {
    fail(CheckKind::shape, 0,
         std::to_string(states.size()) + " states for " + std::to_string(m) + " factors");
    states.assign(1, c.input);
    for (const SwapSet& b : c.factors) states.push_back(apply_swapset(b, states.back()));
  }
  if (states.front() != c.input)
    fail(CheckKind::initial_state, 0, "first state differs from the input");

  Permutation product = Permutation::identity(n);
  for (const SwapSet& b : c.factors) product = compose(product, b.to_permutation());
  if (product != c.input)
    fail(CheckKind::product_mismatch, 0,
         "product of factors is " + format(product) + ", input is " + format(c.input));

  for (int k = 1; k <= m; ++k) {
    const SwapSet& b = c.factors[k - 1];
    const Permutation& before = states[k - 1];
    const Permutation& after = states[k];
    if (b.empty()) fail(CheckKind::empty_factor, k, "factor is the identity");
    for (int s : b.positions())
      if (before(s) < before(s + 1))
        fail(CheckKind::non_inverted_swap, k,
             "swap " + std::to_string(s) + " acts on contented rows (" +
                 std::to_string(before(s)) + ", " + std::to_string(before(s + 1)) + ")");
    if (apply_swapset(b, before) != after)
      fail(CheckKind::state_mismatch, k, "state is not factor times previous state");
    const auto inv_before = inversion_count(before);
    const auto inv_after = inversion_count(after);
    if (inv_after != inv_before - static_cast<std::int64_t>(b.count()))
      fail(CheckKind::inversion_drop, k,
           "inversions went from " + std::to_string(inv_before) + " to " +
               std::to_string(inv_after) + " with " + std::to_string(b.count()) + " swaps");
    const DistanceTable d0 = distance_table(before);
    const DistanceTable d1 = distance_table(after);
    if (d1.l1() > d0.l1()) fail(CheckKind::l1_increase, k, "l1 norm increased");
    if (d1.linf() > d0.linf()) fail(CheckKind::linf_increase, k, "bandwidth increased");
    if (d1.l2_squared() >= d0.l2_squared())
      fail(CheckKind::l2_not_decreasing, k, "l2 norm did not decrease");
  }
  if (!states.back().is_identity())
    fail(CheckKind::not_identity, m, "final state " + format(states.back()) + " is not the identity");
  return rep;
}

}  // namespace bandperm
