#pragma once

// Permutations in one-line notation. Row i of the permutation matrix has its
// 1 in column sigma(i); all external indices are 1-based.

#include <algorithm>
#include <cctype>
#include <charconv>
#include <compare>
#include <cstdlib>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bandperm/error.hpp"

namespace bandperm {

class Permutation {
 public:
  /// Validates that `one_line` is a bijection of {1..n}, n >= 1.
  explicit Permutation(std::vector<int> one_line) : sigma_(std::move(one_line)) {
    validate();
  }

  static Permutation identity(int n) {
    if (n < 1) throw PreconditionError("permutation size must be positive");
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[i] = i + 1;
    return Permutation(std::move(v), Trusted{});
  }

  /// Skips validation. For internal producers whose output is a bijection by
  /// construction.
  static Permutation from_trusted(std::vector<int> one_line) {
    return Permutation(std::move(one_line), Trusted{});
  }

  int size() const noexcept { return static_cast<int>(sigma_.size()); }

  /// Column of the 1 in `row` (both 1-based).
  int operator()(int row) const { return sigma_[static_cast<std::size_t>(row - 1)]; }

  std::span<const int> one_line() const noexcept { return sigma_; }

  bool is_identity() const noexcept {
    for (std::size_t i = 0; i < sigma_.size(); ++i)
      if (sigma_[i] != static_cast<int>(i) + 1) return false;
    return true;
  }

  bool is_fixed(int row) const { return (*this)(row) == row; }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  struct Trusted {};
  Permutation(std::vector<int> v, Trusted) : sigma_(std::move(v)) {}

  void validate() const {
    const int n = size();
    if (n == 0) throw MalformedPermutation("empty permutation", 0);
    std::vector<int> seen_at(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 0; i < n; ++i) {
      const int v = sigma_[i];
      if (v < 1 || v > n)
        throw MalformedPermutation("value " + std::to_string(v) + " at index " +
                                       std::to_string(i + 1) + " is outside 1.." +
                                       std::to_string(n),
                                   i + 1);
      if (seen_at[v] != 0)
        throw MalformedPermutation("duplicate value " + std::to_string(v) +
                                       " at index " + std::to_string(i + 1) +
                                       " (first seen at index " +
                                       std::to_string(seen_at[v]) + ")",
                                   i + 1);
      seen_at[v] = i + 1;
    }
  }

  std::vector<int> sigma_;
};

/// Splits on whitespace and parses each token as a base-10 integer.
inline std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  std::size_t i = 0;
  int token = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i == text.size()) break;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    ++token;
    int value = 0;
    const auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + j, value);
    if (ec != std::errc{} || ptr != text.data() + j)
      throw MalformedPermutation(
          "token " + std::to_string(token) + " ('" + std::string(text.substr(i, j - i)) +
              "') is not an integer",
          token);
    out.push_back(value);
    i = j;
  }
  return out;
}

/// Parses whitespace-separated 1-based values, e.g. "3 1 4 2".
inline Permutation parse_permutation(std::string_view text) {
  return Permutation(parse_int_list(text));
}

inline std::string format(const Permutation& p) {
  std::string out;
  for (int v : p.one_line()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
  }
  return out;
}

inline Permutation inverse(const Permutation& p) {
  std::vector<int> inv(static_cast<std::size_t>(p.size()));
  for (int i = 1; i <= p.size(); ++i) inv[p(i) - 1] = i;
  return Permutation::from_trusted(std::move(inv));
}

/// Matrix product A*B in one-line form: row i of AB is row a(i) of B, so
/// (AB)(i) = b(a(i)).
inline Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size())
    throw SizeMismatch("compose: sizes " + std::to_string(a.size()) + " and " +
                       std::to_string(b.size()));
  std::vector<int> out(static_cast<std::size_t>(a.size()));
  for (int i = 1; i <= a.size(); ++i) out[i - 1] = b(a(i));
  return Permutation::from_trusted(std::move(out));
}

inline int bandwidth(const Permutation& p) {
  int w = 0;
  for (int i = 1; i <= p.size(); ++i) w = std::max(w, std::abs(p(i) - i));
  return w;
}

}  // namespace bandperm
