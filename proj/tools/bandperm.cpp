// bandperm: command-line front end for factorization, classification,
// generation, the optimal-count oracle and exhaustive sweeps.
//
// Exit status: 0 success, 1 bound/claim violation or failed verification,
// 2 usage error, 3 malformed input.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "bandperm/bandperm.hpp"

namespace bp = bandperm;
using nlohmann::json;

namespace {

constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitMalformed = 3;

// Cap on rejection-sampling draws for `gen random --bandwidth`.
constexpr std::uint64_t kMaxSampleAttempts = 1'000'000;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// "@path" arguments are replaced by the file's contents.
std::string resolve(const std::string& arg) {
  return !arg.empty() && arg.front() == '@' ? read_file(arg.substr(1)) : arg;
}

void write_output(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << text;
}

std::string join(const std::vector<bp::RowRange>& ranges) {
  std::string s;
  for (const auto& r : ranges) s += (s.empty() ? "" : " ") + bp::format(r);
  return s.empty() ? "(none)" : s;
}

json ranges_json(const std::vector<bp::RowRange>& ranges) {
  json a = json::array();
  for (const auto& r : ranges) a.push_back({r.lo, r.hi});
  return a;
}

// --- factor ---------------------------------------------------------------------

struct FactorArgs {
  std::string perm;
  std::string policy = "oo";
  bool json = false;
};

int run_factor(const FactorArgs& a) {
  const bp::Permutation p = bp::parse_permutation(resolve(a.perm));
  const bp::Policy policy = bp::parse_policy(a.policy);
  bp::FactorChain chain{p, {}, {}};
  try {
    chain = bp::factorize(p, policy);
  } catch (const bp::PolicyNotApplicable& e) {
    std::cerr << "bandperm: " << e.what() << "\n";
    return kExitViolation;
  }
  const int w = bp::bandwidth(p);
  const int bound = w > 0 ? 2 * w - 1 : 0;
  const bool pass = chain.length() <= bound;
  if (a.json) {
    std::cout << bp::chain_to_json(chain, policy).dump(2) << "\n";
  } else {
    std::cout << "input: " << bp::format(p) << "\n"
              << "policy: " << bp::to_string(policy) << "\n";
    for (int k = 0; k < chain.length(); ++k)
      std::cout << "factor " << k + 1 << ": " << bp::format(chain.factors[k]) << "\n";
    std::cout << "factors: " << chain.length() << "\n"
              << "bandwidth: " << w << "\n"
              << "bound: " << bound << "\n"
              << (pass ? "PASS" : "FAIL") << "\n";
  }
  return pass ? 0 : kExitViolation;
}

// --- classify -------------------------------------------------------------------

int run_classify(const std::string& arg, bool as_json) {
  const bp::Permutation p = bp::parse_permutation(resolve(arg));
  const bp::SignProfile s = bp::signs(p);
  const bp::CanonicityFlags f = bp::classify(p);
  const bp::DistanceTable d = bp::distance_table(p);
  const auto secs = bp::sections(p);
  const auto blocks = bp::inverted_blocks(p);
  if (as_json) {
    json j;
    j["schema"] = "bandperm.classify/1";
    j["input"] = bp::to_json(p);
    j["bandwidth"] = bp::bandwidth(p);
    j["row_signs"] = bp::format_signs(s.rows);
    j["col_signs"] = bp::format_signs(s.cols);
    j["sections"] = ranges_json(secs);
    j["inverted_blocks"] = ranges_json(blocks);
    j["inversions"] = bp::inversion_count(p);
    j["flags"] = {{"upper_canonical", f.upper_canonical}, {"lower_canonical", f.lower_canonical},
                  {"strang_canonical", f.strang_canonical}, {"half_canonical", f.half_canonical},
                  {"row_settled", f.row_settled},         {"column_settled", f.column_settled},
                  {"settled", f.settled},                 {"tracefree", f.tracefree}};
    j["distance_table"] = d.entries;
    j["norms"] = {{"l1", d.l1()}, {"l2", d.l2()}, {"linf", d.linf()}};
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  std::cout << "input: " << bp::format(p) << "\n"
            << "bandwidth: " << bp::bandwidth(p) << "\n"
            << "row signs: " << bp::format_signs(s.rows) << "\n"
            << "col signs: " << bp::format_signs(s.cols) << "\n"
            << "sections: " << join(secs) << "\n"
            << "inverted blocks: " << join(blocks) << "\n"
            << "inversions: " << bp::inversion_count(p) << "\n"
            << "upper canonical: " << yn(f.upper_canonical) << "\n"
            << "lower canonical: " << yn(f.lower_canonical) << "\n"
            << "strang canonical: " << yn(f.strang_canonical) << "\n"
            << "half canonical: " << yn(f.half_canonical) << "\n"
            << "row settled: " << yn(f.row_settled) << "\n"
            << "column settled: " << yn(f.column_settled) << "\n"
            << "tracefree: " << yn(f.tracefree) << "\n"
            << "distance table:";
  for (int e : d.entries) std::cout << ' ' << e;
  std::cout << "\nnorms: l1=" << d.l1() << " l2^2=" << d.l2_squared() << " linf=" << d.linf()
            << "\n";
  return 0;
}

// --- oracle ---------------------------------------------------------------------

int run_oracle(const std::string& arg, std::optional<int> all, bool as_json) {
  if (all) {
    const bp::DistanceMap m = bp::bfs_all(*all);
    const auto hist = m.histogram();
    if (as_json) {
      std::cout << json{{"schema", "bandperm.distances/1"},
                        {"n", *all},
                        {"entries", m.entries()},
                        {"diameter", m.diameter()},
                        {"histogram", hist}}
                       .dump(2)
                << "\n";
    } else {
      std::cout << "n: " << *all << "\nentries: " << m.entries()
                << "\ndiameter: " << m.diameter() << "\n";
      for (std::size_t d = 0; d < hist.size(); ++d)
        std::cout << "distance " << d << ": " << hist[d] << "\n";
    }
    return 0;
  }
  if (arg.empty()) throw UsageError("oracle needs a permutation or --all <n>");
  const bp::Permutation p = bp::parse_permutation(resolve(arg));
  const int d = bp::opfactors(p);
  if (as_json)
    std::cout << json{{"input", bp::to_json(p)}, {"opfactors", d}}.dump(2) << "\n";
  else
    std::cout << d << "\n";
  return 0;
}

// --- sweep ----------------------------------------------------------------------

struct SweepArgs {
  int n = 0;
  std::string claims;
  std::string json_path;
  std::string csv_path;
  unsigned workers = 1;
};

int run_sweep(const SweepArgs& a) {
  std::vector<char> claims;
  try {
    claims = a.claims.empty() ? bp::default_claims(a.n) : bp::parse_claims(a.claims);
  } catch (const bp::MalformedInput& e) {
    throw UsageError(e.what());
  }
  for (char c : claims)
    if (a.n > bp::claim_info(c).max_n)
      throw UsageError(std::string("claim '") + c + "' supports n <= " +
                       std::to_string(bp::claim_info(c).max_n));
  const bp::SweepReport r = bp::sweep(a.n, claims, {a.workers, !a.csv_path.empty()});
  for (const auto& [id, cr] : r.claims)
    std::cout << "claim " << id << ": checked " << cr.checked << ", violations "
              << cr.violations.size() << " (" << bp::claim_info(id).title << ")\n";
  for (const bp::TightCase& t : r.tight_cases) {
    std::cout << "tight (" << t.claim << "):";
    for (int v : t.sigma) std::cout << ' ' << v;
    std::cout << " w=" << t.w << " f=" << t.neutral_rows << " length=" << t.length
              << (t.insertfix_structure ? " insert_fix structure" : "") << "\n";
  }
  if (r.claims.count('a'))
    std::cout << "observation: OO length of P and P^-1 differ on "
              << r.observations.oo_inverse_length_mismatches << " inputs\n";
  if (r.claims.count('g'))
    std::cout << "observation: shortest greedy chain reaches 2w on "
              << r.observations.greedy_exists_reading_violations << " inputs\n";
  if (!a.json_path.empty()) write_output(a.json_path, bp::to_json(r).dump(2) + "\n");
  if (!a.csv_path.empty()) {
    std::ostringstream csv;
    bp::write_csv(r, csv);
    write_output(a.csv_path, csv.str());
  }
  std::cout << (r.ok() ? "PASS" : "FAIL") << "\n";
  return r.ok() ? 0 : kExitViolation;
}

// --- gen ------------------------------------------------------------------------

int run_gen_random(int n, std::optional<int> max_w, std::uint64_t seed) {
  if (n < 1) throw UsageError("gen random: n must be positive");
  if (max_w && *max_w < 0) throw UsageError("gen random: bandwidth must be non-negative");
  std::mt19937_64 rng(seed);
  std::vector<int> v(static_cast<std::size_t>(n));
  for (std::uint64_t attempt = 0; attempt < kMaxSampleAttempts; ++attempt) {
    std::iota(v.begin(), v.end(), 1);
    std::shuffle(v.begin(), v.end(), rng);
    const bp::Permutation p(v);
    if (!max_w || bp::bandwidth(p) <= *max_w) {
      std::cout << bp::format(p) << "\n";
      return 0;
    }
  }
  std::cerr << "bandperm: no permutation of bandwidth <= " << *max_w << " in "
            << kMaxSampleAttempts << " draws\n";
  return kExitViolation;
}

// --- verify ---------------------------------------------------------------------

int run_verify(const std::string& path) {
  const std::string text = path == "-" ? std::string(std::istreambuf_iterator<char>(std::cin), {})
                                       : read_file(path.front() == '@' ? path.substr(1) : path);
  const bp::FactorChain c = bp::parse_chain(text);
  const bp::VerificationReport rep = bp::verify_chain(c);
  if (rep.ok()) {
    std::cout << "OK: " << c.length() << " factors\n";
    return 0;
  }
  for (const bp::Violation& v : rep.violations)
    std::cout << "step " << v.step << ": " << bp::to_string(v.kind) << ": " << v.message << "\n";
  return kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Factor banded permutation matrices into bandwidth-1 factors"};
  app.require_subcommand(1);

  FactorArgs fa;
  auto* factor = app.add_subcommand("factor", "Factor a permutation with a greedy policy");
  factor->add_option("perm", fa.perm, "Permutation in one-line notation, or @file")->required();
  factor->add_option("--policy", fa.policy, "reducing | oo | greedy (alias greedy-min) | greedy-first")
      ->check(CLI::IsMember({"reducing", "oo", "greedy", "greedy-min", "greedy-first"}));
  factor->add_flag("--json", fa.json, "Emit the chain as JSON");

  std::string classify_perm;
  bool classify_json = false;
  auto* classify = app.add_subcommand("classify", "Signs, sections, canonicity and norms");
  classify->add_option("perm", classify_perm, "Permutation, or @file")->required();
  classify->add_flag("--json", classify_json, "Emit JSON");

  std::string oracle_perm;
  std::optional<int> oracle_all;
  bool oracle_json = false;
  auto* oracle = app.add_subcommand("oracle", "Minimal factor count by breadth-first search");
  auto* oracle_perm_opt = oracle->add_option("perm", oracle_perm, "Permutation, or @file");
  oracle->add_option("--all", oracle_all, "Summarize distances for every permutation of size n")
      ->excludes(oracle_perm_opt);
  oracle->add_flag("--json", oracle_json, "Emit JSON");

  SweepArgs sa;
  auto* sweep = app.add_subcommand("sweep", "Check bounds and claims over all permutations");
  sweep->add_option("n", sa.n, "Matrix size")->required();
  sweep->add_option("--claims", sa.claims, "Comma-separated claim ids (default: all that apply)");
  sweep->add_option("--json", sa.json_path, "Write the JSON report to this path ('-' = stdout)");
  sweep->add_option("--csv", sa.csv_path, "Write per-permutation records as CSV");
  sweep->add_option("--workers", sa.workers, "Worker threads")->check(CLI::Range(1u, 64u));

  auto* gen = app.add_subcommand("gen", "Generate a permutation");
  gen->require_subcommand(1);
  int circ_n = 0;
  int circ_k = 0;
  auto* gen_circ = gen->add_subcommand("circulant", "sigma(m) = ((k + m - 2) mod n) + 1");
  gen_circ->add_option("n", circ_n)->required();
  gen_circ->add_option("k", circ_k)->required();
  std::string sign_rows, sign_cols;
  auto* gen_signs = gen->add_subcommand("from-signs", "Strang canonical matrix with given signs");
  gen_signs->add_option("rows", sign_rows, "Row signs, e.g. +++-")->required();
  gen_signs->add_option("cols", sign_cols, "Column signs, e.g. -+++")->required();
  int rand_n = 0;
  std::optional<int> rand_w;
  std::uint64_t rand_seed = 1;
  auto* gen_rand = gen->add_subcommand("random", "Uniform random permutation");
  gen_rand->add_option("n", rand_n)->required();
  gen_rand->add_option("--bandwidth", rand_w, "Reject draws with larger bandwidth");
  gen_rand->add_option("--seed", rand_seed, "Random seed");

  std::string verify_path;
  auto* verify = app.add_subcommand("verify", "Re-check a serialized factor chain");
  verify->add_option("chain", verify_path, "Chain file (text or JSON), '-' for stdin")->required();

  // Column signs such as "-+++" look like flags; treat everything after
  // `gen from-signs` as positional unless it is a long option.
  std::vector<std::string> args(argv + 1, argv + argc);
  if (auto it = std::find(args.begin(), args.end(), "from-signs"); it != args.end()) {
    const bool plain = std::none_of(it + 1, args.end(), [](const std::string& a) {
      return a.rfind("--", 0) == 0 || a == "-h";
    });
    if (plain) args.insert(it + 1, "--");
  }
  std::reverse(args.begin(), args.end());  // CLI11 consumes a reversed vector

  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*factor) return run_factor(fa);
    if (*classify) return run_classify(classify_perm, classify_json);
    if (*oracle) return run_oracle(oracle_perm, oracle_all, oracle_json);
    if (*sweep) return run_sweep(sa);
    if (*gen_circ) {
      try {
        std::cout << bp::format(bp::circulant(circ_n, circ_k).perm) << "\n";
      } catch (const bp::PreconditionError& e) {
        throw UsageError(e.what());
      }
      return 0;
    }
    if (*gen_signs) {
      std::cout << bp::format(bp::canonical_from_signs(
                       {bp::parse_signs(resolve(sign_rows)), bp::parse_signs(resolve(sign_cols))}))
                << "\n";
      return 0;
    }
    if (*gen_rand) return run_gen_random(rand_n, rand_w, rand_seed);
    if (*verify) return run_verify(verify_path);
  } catch (const UsageError& e) {
    std::cerr << "bandperm: " << e.what() << "\n";
    return kExitUsage;
  } catch (const bp::MalformedPermutation& e) {
    std::cerr << "bandperm: malformed permutation: " << e.what() << "\n";
    return kExitMalformed;
  } catch (const bp::MalformedInput& e) {
    std::cerr << "bandperm: malformed input: " << e.what() << "\n";
    return kExitMalformed;
  } catch (const bp::ResourceError& e) {
    std::cerr << "bandperm: " << e.what() << "\n";
    return kExitUsage;
  } catch (const bp::PreconditionError& e) {
    std::cerr << "bandperm: " << e.what() << "\n";
    return kExitUsage;
  } catch (const bp::Error& e) {
    std::cerr << "bandperm: internal error: " << e.what() << "\n";
    return kExitViolation;
  }
  return kExitUsage;
}
