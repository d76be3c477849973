#pragma once

// Exhaustive verification of factor-count bounds and identities over every
// permutation (or a qualifying subclass) of one size.
//
// Claims:
//   a  best OO chain and the deterministic OO policy both use < 2w factors
//   b  circulants: reducing chains of length n - 1, OO length 2w - 1 if n = 2w
//   c  closed-form count of settled canonical matrices = reducing chain length
//   d  reducing-only terminates on canonical matrices, tracefree sections
//   e  settled canonical section with f >= 1 neutral rows: length <= 2w - f
//   f  a circulant's count dominates sign-equivalent settled canonical ones
//   g  longest greedy bubble chain < 2w
//   h  shortest greedy bubble chain = opfactors
//   i  deterministic OO length <= opfactors + floor(n / 3)
//   j  opfactors <= n
//   k  insert_fix additivity on circulants

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "bandperm/canonical.hpp"
#include "bandperm/error.hpp"
#include "bandperm/factorize.hpp"
#include "bandperm/oracle.hpp"
#include "bandperm/permutation.hpp"
#include "bandperm/ranking.hpp"
#include "bandperm/structure.hpp"
#include "bandperm/surgery.hpp"

namespace bandperm {

inline constexpr std::string_view kSweepSchema = "bandperm.sweep/1";

struct ClaimInfo {
  char id;
  std::string_view title;
  int max_n;
};

inline constexpr std::array<ClaimInfo, 11> kClaims = {{
    {'a', "OO chain length < 2w (best OO chain and deterministic policy)", 8},
    {'b', "circulant tightness: length n-1, and 2w-1 when n = 2w", 9},
    {'c', "closed-form count equals reducing chain length", 8},
    {'d', "reducing-only terminates on canonical tracefree-section matrices", 8},
    {'e', "settled canonical section with f neutral rows: length <= 2w-f", 8},
    {'f', "circulant count dominates sign-equivalent settled canonical", 8},
    {'g', "longest greedy bubble chain < 2w", 7},
    {'h', "shortest greedy bubble chain = opfactors", 7},
    {'i', "deterministic OO length <= opfactors + floor(n/3)", 8},
    {'j', "opfactors <= n", 9},
    {'k', "insert_fix additivity on circulants", 8},
}};

inline const ClaimInfo& claim_info(char id) {
  for (const ClaimInfo& c : kClaims)
    if (c.id == id) return c;
  throw MalformedInput(std::string("unknown claim '") + id + "'");
}

/// "a,c,e" -> {'a','c','e'}; validates ids, drops duplicates, keeps order.
inline std::vector<char> parse_claims(std::string_view text) {
  std::vector<char> out;
  std::size_t i = 0;
  while (i <= text.size()) {
    const std::size_t j = std::min(text.find(',', i), text.size());
    std::string_view tok = text.substr(i, j - i);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    if (tok.size() != 1) throw MalformedInput("invalid claim id '" + std::string(tok) + "'");
    claim_info(tok[0]);
    if (std::find(out.begin(), out.end(), tok[0]) == out.end()) out.push_back(tok[0]);
    i = j + 1;
  }
  return out;
}

/// Claims whose size limit admits n.
inline std::vector<char> default_claims(int n) {
  std::vector<char> out;
  for (const ClaimInfo& c : kClaims)
    if (n <= c.max_n) out.push_back(c.id);
  return out;
}

struct Finding {
  std::vector<int> sigma;
  std::string detail;
};

struct ClaimResult {
  char id = '?';
  std::size_t checked = 0;
  std::vector<Finding> violations;
};

struct SweepRecord {
  std::vector<int> sigma;
  int w = 0;
  std::optional<int> oo_len;
  std::optional<int> best_oo_len;
  std::optional<int> opfactors;
  std::optional<int> longest_greedy;
  std::optional<int> shortest_greedy;
  /// 2w - 1 - oo_len, for nonidentity inputs.
  std::optional<int> d_p;
};

struct TightCase {
  char claim;
  std::vector<int> sigma;
  int w;
  int neutral_rows;
  int length;
  /// P = insert_fix(h + 1, C) with C the 2h x 2h circulant of bandwidth h.
  bool insertfix_structure;
};

struct SweepObservations {
  /// Deterministic OO length of P differs from that of P^-1.
  std::size_t oo_inverse_length_mismatches = 0;
  /// Nonidentity P for which even the shortest greedy chain has >= 2w factors.
  std::size_t greedy_exists_reading_violations = 0;
};

struct SweepReport {
  int n = 0;
  std::map<char, ClaimResult> claims;
  std::vector<SweepRecord> records;
  std::vector<TightCase> tight_cases;
  SweepObservations observations;

  std::size_t violation_count() const {
    std::size_t c = 0;
    for (const auto& [id, r] : claims) c += r.violations.size();
    return c;
  }
  bool ok() const { return violation_count() == 0; }
};

struct SweepOptions {
  unsigned workers = 1;
  bool keep_records = true;
};

namespace detail {

inline std::vector<int> one_line_of(const Permutation& p) {
  return {p.one_line().begin(), p.one_line().end()};
}

inline int neutral_rows(const Permutation& p) {
  int f = 0;
  for (int i = 1; i <= p.size(); ++i) f += p(i) == i ? 1 : 0;
  return f;
}

// Ranks of size-n permutations ordered by inversion count. Every greedy step
// lowers the inversion count, so tables filled in this order only read
// entries that are already final.
inline std::vector<std::uint32_t> ranks_by_inversions(int n) {
  const auto total = factorial(n);
  const int max_inv = n * (n - 1) / 2;
  std::vector<std::vector<std::uint32_t>> buckets(static_cast<std::size_t>(max_inv) + 1);
  std::vector<int> v(static_cast<std::size_t>(n));
  for (std::uint64_t r = 0; r < total; ++r) {
    unrank_into(r, v);
    int inv = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) inv += v[i] > v[j] ? 1 : 0;
    buckets[inv].push_back(static_cast<std::uint32_t>(r));
  }
  std::vector<std::uint32_t> out;
  out.reserve(total);
  for (auto& b : buckets) out.insert(out.end(), b.begin(), b.end());
  return out;
}

// Shortest and longest chain length where each step picks any of options(P).
struct ChainTable {
  std::vector<std::int8_t> shortest;
  std::vector<std::int8_t> longest;
};

inline ChainTable build_chain_table(
    int n, const std::vector<std::uint32_t>& order,
    const std::function<std::vector<SwapSet>(const Permutation&)>& options) {
  ChainTable t;
  t.shortest.assign(order.size(), -1);
  t.longest.assign(order.size(), -1);
  for (std::uint32_t r : order) {
    const Permutation p = unrank(n, r);
    if (p.is_identity()) {
      t.shortest[r] = t.longest[r] = 0;
      continue;
    }
    int lo = -1;
    int hi = -1;
    for (const SwapSet& s : options(p)) {
      if (s.empty()) throw InternalError("chain table: empty step from " + format(p));
      const auto rr = rank_of(apply_swapset(s, p));
      if (t.shortest[rr] < 0) throw InternalError("chain table: order violated");
      lo = lo < 0 ? t.shortest[rr] + 1 : std::min(lo, t.shortest[rr] + 1);
      hi = std::max(hi, t.longest[rr] + 1);
    }
    if (lo < 0) throw InternalError("chain table: no step from " + format(p));
    t.shortest[r] = static_cast<std::int8_t>(lo);
    t.longest[r] = static_cast<std::int8_t>(hi);
  }
  return t;
}

// Shortest chain over all OO choices, for permutations of any size.
class BestOoSolver {
 public:
  int length(const Permutation& p) {
    if (p.is_identity()) return 0;
    const std::uint64_t key = rank_of(p) * 32 + static_cast<std::uint64_t>(p.size());
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    int best = -1;
    for (const SwapSet& o : enumerate_oo(p)) {
      const int sub = length(apply_swapset(o, p)) + 1;
      best = best < 0 ? sub : std::min(best, sub);
    }
    memo_.emplace(key, best);
    return best;
  }

 private:
  std::unordered_map<std::uint64_t, int> memo_;
};

inline std::optional<int> reducing_length(const Permutation& p) {
  try {
    return factorize(p, Policy::reducing()).length();
  } catch (const PolicyNotApplicable&) {
    return std::nullopt;
  }
}

inline bool has_insertfix_structure(const Permutation& p) {
  if (detail::neutral_rows(p) != 1 || p.is_identity()) return false;
  const Permutation e = essence(p);
  if (e.size() % 2 != 0) return false;
  const int h = e.size() / 2;
  if (e != circulant(2 * h, h + 1).perm) return false;
  return insert_fix(h + 1, e) == p;
}

struct Partial {
  std::map<char, ClaimResult> claims;
  std::vector<SweepRecord> records;
  SweepObservations observations;
};

}  // namespace detail

inline SweepReport sweep(int n, const std::vector<char>& claims, const SweepOptions& opt = {}) {
  if (n < 1) throw PreconditionError("sweep: n must be positive");
  for (char c : claims) {
    const ClaimInfo& info = claim_info(c);
    if (n > info.max_n)
      throw ResourceError(std::string("claim '") + c + "' supports n <= " +
                          std::to_string(info.max_n));
  }
  auto wants = [&](char c) { return std::find(claims.begin(), claims.end(), c) != claims.end(); };

  SweepReport rep;
  rep.n = n;
  for (char c : claims) rep.claims[c].id = c;

  const bool need_oo = wants('a') || wants('i') || wants('e');
  const bool need_op = wants('h') || wants('i') || wants('j');
  const bool need_greedy = wants('g') || wants('h');
  const bool per_perm = wants('a') || wants('g') || wants('h') || wants('i') || wants('j');

  std::vector<std::uint32_t> order;
  if (need_oo || need_greedy) order = detail::ranks_by_inversions(n);
  detail::ChainTable det, best, greedy;
  if (need_oo) {
    det = detail::build_chain_table(n, order, [](const Permutation& p) {
      return std::vector<SwapSet>{opportunistic_overtaking(p)};
    });
    best = detail::build_chain_table(n, order, enumerate_oo);
  }
  if (need_greedy) greedy = detail::build_chain_table(n, order, greedy_bubble_sets);
  std::optional<DistanceMap> dist;
  if (need_op) dist = bfs_all(n);

  // Per-permutation claims, partitioned into rank ranges.
  if (per_perm) {
    const std::uint64_t total = factorial(n);
    const unsigned workers = std::max(1u, std::min<unsigned>(opt.workers, 64));
    std::vector<detail::Partial> parts(workers);
    auto run = [&](unsigned w) {
      detail::Partial& part = parts[w];
      for (char c : claims) part.claims[c].id = c;
      const std::uint64_t begin = total * w / workers;
      const std::uint64_t end = total * (w + 1) / workers;
      std::vector<int> v(static_cast<std::size_t>(n));
      for (std::uint64_t r = begin; r < end; ++r) {
        unrank_into(r, v);
        const Permutation p = Permutation::from_trusted(v);
        const int w2 = 2 * bandwidth(p);
        const bool nonid = !p.is_identity();
        SweepRecord rec;
        rec.w = bandwidth(p);
        if (need_oo) {
          rec.oo_len = det.shortest[r];
          rec.best_oo_len = best.shortest[r];
          if (nonid) rec.d_p = w2 - 1 - *rec.oo_len;
        }
        if (need_op) rec.opfactors = dist->at_rank(r);
        if (need_greedy) {
          rec.longest_greedy = greedy.longest[r];
          rec.shortest_greedy = greedy.shortest[r];
        }
        if (wants('a') && nonid) {
          auto& cr = part.claims['a'];
          ++cr.checked;
          if (*rec.best_oo_len >= w2)
            cr.violations.push_back({v, "best OO chain has " + std::to_string(*rec.best_oo_len) +
                                            " factors, 2w = " + std::to_string(w2)});
          if (*rec.oo_len >= w2)
            cr.violations.push_back({v, "deterministic OO chain has " +
                                            std::to_string(*rec.oo_len) + " factors, 2w = " +
                                            std::to_string(w2)});
          if (det.shortest[rank_of(inverse(p))] != *rec.oo_len)
            ++part.observations.oo_inverse_length_mismatches;
        }
        if (wants('g') && nonid) {
          auto& cr = part.claims['g'];
          ++cr.checked;
          if (*rec.longest_greedy >= w2)
            cr.violations.push_back({v, "longest greedy chain has " +
                                            std::to_string(*rec.longest_greedy) +
                                            " factors, 2w = " + std::to_string(w2)});
          if (*rec.shortest_greedy >= w2) ++part.observations.greedy_exists_reading_violations;
        }
        if (wants('h')) {
          auto& cr = part.claims['h'];
          ++cr.checked;
          if (*rec.shortest_greedy != *rec.opfactors)
            cr.violations.push_back({v, "shortest greedy chain " +
                                            std::to_string(*rec.shortest_greedy) +
                                            " vs opfactors " + std::to_string(*rec.opfactors)});
        }
        if (wants('i')) {
          auto& cr = part.claims['i'];
          ++cr.checked;
          if (*rec.oo_len > *rec.opfactors + n / 3)
            cr.violations.push_back({v, "deterministic OO " + std::to_string(*rec.oo_len) +
                                            " > opfactors " + std::to_string(*rec.opfactors) +
                                            " + " + std::to_string(n / 3)});
        }
        if (wants('j')) {
          auto& cr = part.claims['j'];
          ++cr.checked;
          if (*rec.opfactors > n)
            cr.violations.push_back({v, "opfactors " + std::to_string(*rec.opfactors) + " > n"});
        }
        if (opt.keep_records) {
          rec.sigma = v;
          part.records.push_back(std::move(rec));
        }
      }
    };
    if (workers == 1) {
      run(0);
    } else {
      std::vector<std::jthread> pool;
      for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
    }
    for (auto& part : parts) {
      for (auto& [id, cr] : part.claims) {
        auto& dst = rep.claims[id];
        dst.checked += cr.checked;
        for (auto& f : cr.violations) dst.violations.push_back(std::move(f));
      }
      for (auto& r : part.records) rep.records.push_back(std::move(r));
      rep.observations.oo_inverse_length_mismatches +=
          part.observations.oo_inverse_length_mismatches;
      rep.observations.greedy_exists_reading_violations +=
          part.observations.greedy_exists_reading_violations;
    }
  }

  // Circulant tightness.
  if (wants('b')) {
    auto& cr = rep.claims['b'];
    for (int k = 2; k <= n; ++k) {
      const Circulant c = circulant(n, k);
      ++cr.checked;
      const std::vector<int> v = detail::one_line_of(c.perm);
      const CanonicityFlags f = classify(c.perm);
      if (!f.strang_canonical || !f.row_settled || !f.column_settled || !f.tracefree)
        cr.violations.push_back({v, "circulant is not a tracefree settled canonical matrix"});
      if (bandwidth(c.perm) != c.predicted_bandwidth)
        cr.violations.push_back({v, "bandwidth formula predicts " +
                                        std::to_string(c.predicted_bandwidth)});
      const auto red = detail::reducing_length(c.perm);
      const int oo = factorize(c.perm, Policy::oo()).length();
      if (!red || *red != n - 1 || oo != n - 1)
        cr.violations.push_back({v, "factor count is not n-1"});
      if (n % 2 == 0 && k == n / 2 + 1) {
        const int w = n / 2;
        if (oo != 2 * w - 1)
          cr.violations.push_back({v, "n = 2w but OO length " + std::to_string(oo)});
        else
          rep.tight_cases.push_back({'b', v, w, 0, oo, false});
      }
    }
  }

  // Class-restricted claims over canonical matrices.
  if (wants('c') || wants('d') || wants('e') || wants('f')) {
    std::vector<Circulant> circs;
    std::vector<std::optional<int>> circ_len;
    std::vector<SignProfile> circ_signs;
    for (int k = 2; k <= n; ++k) {
      circs.push_back(circulant(n, k));
      circ_len.push_back(detail::reducing_length(circs.back().perm));
      circ_signs.push_back(signs(circs.back().perm));
    }
    for (const Permutation& p : enumerate_strang_canonical(n)) {
      const std::vector<int> v = detail::one_line_of(p);
      const CanonicityFlags f = classify(p);
      const bool tf_sections = nontrivial_sections_tracefree(p);
      std::optional<int> red;
      if (tf_sections) red = detail::reducing_length(p);

      if (wants('c') && f.settled && tf_sections) {
        auto& cr = rep.claims['c'];
        ++cr.checked;
        try {
          const int predicted = settled_factor_count(p);
          if (!red || *red != predicted)
            cr.violations.push_back({v, "closed form " + std::to_string(predicted) +
                                            " vs reducing chain " +
                                            (red ? std::to_string(*red) : "stuck")});
        } catch (const InternalError& e) {
          cr.violations.push_back({v, e.what()});
        }
      }
      if (wants('d') && tf_sections) {
        auto& cr = rep.claims['d'];
        ++cr.checked;
        if (!red) {
          cr.violations.push_back({v, "reducing matrix empty before reaching the identity"});
        } else if (!verify_chain(factorize(p, Policy::reducing())).ok()) {
          cr.violations.push_back({v, "reducing chain fails verification"});
        }
      }
      if (wants('e') && f.settled && sections(p).size() == 1 && n >= 2) {
        const int nf = detail::neutral_rows(p);
        if (nf >= 1) {
          auto& cr = rep.claims['e'];
          ++cr.checked;
          const int w = bandwidth(p);
          const int len = best.shortest[rank_of(p)];
          if (len > 2 * w - nf)
            cr.violations.push_back({v, "length " + std::to_string(len) + " > 2w - f = " +
                                            std::to_string(2 * w - nf)});
          else if (len == 2 * w - nf)
            rep.tight_cases.push_back({'e', v, w, nf, len, detail::has_insertfix_structure(p)});
        }
      }
      if (wants('f') && f.tracefree) {
        auto& cr = rep.claims['f'];
        const SignProfile sp = signs(p);
        for (std::size_t i = 0; i < circs.size(); ++i) {
          const bool row_eq = f.row_settled && sp.rows == circ_signs[i].rows;
          const bool col_eq = f.column_settled && sp.cols == circ_signs[i].cols;
          if (!row_eq && !col_eq) continue;
          ++cr.checked;
          if (!red || !circ_len[i] || *red > *circ_len[i])
            cr.violations.push_back(
                {v, "exceeds circulant " + format(circs[i].perm) + " count " +
                        (circ_len[i] ? std::to_string(*circ_len[i]) : "stuck")});
        }
      }
    }
  }

  // insert_fix additivity: strictly decreasing positions m_1 > ... > m_l > 1
  // inserted into a c x c circulant, c + l = n, l >= 2.
  if (wants('k')) {
    auto& cr = rep.claims['k'];
    detail::BestOoSolver solver;
    for (int c = 2; c <= n - 2; ++c) {
      const int l = n - c;
      if (l > c - 1) continue;
      for (int k = 2; k <= c; ++k) {
        const Permutation circ = circulant(c, k).perm;
        const int base = solver.length(circ);
        std::vector<int> single(static_cast<std::size_t>(c) + 1, 0);
        for (int m = 2; m <= c; ++m) single[m] = solver.length(insert_fix(m, circ)) - base;
        // choose l positions from {2..c}, taken in decreasing order
        std::vector<int> pick;
        auto recurse = [&](auto&& self, int hi) -> void {
          if (static_cast<int>(pick.size()) == l) {
            Permutation p = circ;
            int expected = 0;
            for (int m : pick) {
              p = insert_fix(m, p);
              expected += single[m];
            }
            ++cr.checked;
            const int actual = solver.length(p) - base;
            if (actual != expected) {
              std::string ms;
              for (int m : pick) ms += (ms.empty() ? "" : ",") + std::to_string(m);
              cr.violations.push_back({detail::one_line_of(p),
                                       "insert_fix(" + ms + ") on " + format(circ) + " adds " +
                                           std::to_string(actual) + ", singles sum to " +
                                           std::to_string(expected)});
            }
            return;
          }
          for (int m = hi; m >= 2; --m) {
            pick.push_back(m);
            self(self, m - 1);
            pick.pop_back();
          }
        };
        recurse(recurse, c);
      }
    }
  }
  return rep;
}

inline nlohmann::json to_json(const SweepReport& r) {
  nlohmann::json j;
  j["schema"] = kSweepSchema;
  j["n"] = r.n;
  j["ok"] = r.ok();
  j["claims"] = nlohmann::json::object();
  for (const auto& [id, cr] : r.claims) {
    nlohmann::json c;
    c["title"] = claim_info(id).title;
    c["checked"] = cr.checked;
    c["violations"] = nlohmann::json::array();
    for (const Finding& f : cr.violations)
      c["violations"].push_back({{"sigma", f.sigma}, {"detail", f.detail}});
    j["claims"][std::string(1, id)] = std::move(c);
  }
  j["tight_cases"] = nlohmann::json::array();
  for (const TightCase& t : r.tight_cases)
    j["tight_cases"].push_back({{"claim", std::string(1, t.claim)},
                                {"sigma", t.sigma},
                                {"bandwidth", t.w},
                                {"neutral_rows", t.neutral_rows},
                                {"length", t.length},
                                {"insertfix_structure", t.insertfix_structure}});
  j["observations"] = {
      {"oo_inverse_length_mismatches", r.observations.oo_inverse_length_mismatches},
      {"greedy_exists_reading_violations", r.observations.greedy_exists_reading_violations}};
  j["records"] = r.records.size();
  return j;
}

inline void write_csv(const SweepReport& r, std::ostream& out) {
  out << "sigma,w,oo_len,best_oo_len,opfactors,longest_greedy,shortest_greedy,d_P\n";
  auto opt = [](const std::optional<int>& x) { return x ? std::to_string(*x) : std::string(); };
  for (const SweepRecord& rec : r.records) {
    for (std::size_t i = 0; i < rec.sigma.size(); ++i) out << (i ? " " : "") << rec.sigma[i];
    out << ',' << rec.w << ',' << opt(rec.oo_len) << ',' << opt(rec.best_oo_len) << ','
        << opt(rec.opfactors) << ',' << opt(rec.longest_greedy) << ','
        << opt(rec.shortest_greedy) << ',' << opt(rec.d_p) << '\n';
  }
}

}  // namespace bandperm
