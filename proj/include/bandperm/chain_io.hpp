#pragma once

// Text and JSON forms of a FactorChain.
//
// Text: the input permutation on the first line, then one line per factor
// holding the left indices of its swaps. Blank lines and lines starting with
// '#' are ignored.

#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "bandperm/error.hpp"
#include "bandperm/factorize.hpp"
#include "bandperm/permutation.hpp"
#include "bandperm/swap_set.hpp"

namespace bandperm {

inline constexpr std::string_view kChainSchema = "bandperm.chain/1";

inline std::string format_chain_text(const FactorChain& c) {
  std::string out = format(c.input) + "\n";
  for (const SwapSet& b : c.factors) out += format(b) + "\n";
  return out;
}

/// States are recomputed from the factors.
inline FactorChain parse_chain_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<Permutation> input;
  std::vector<SwapSet> factors;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    if (!input)
      input = parse_permutation(line);
    else
      factors.push_back(parse_swapset(line, input->size()));
  }
  if (!input) throw MalformedInput("chain text has no input permutation");
  FactorChain c{*input, std::move(factors), {*input}};
  for (const SwapSet& b : c.factors) c.states.push_back(apply_swapset(b, c.states.back()));
  return c;
}

inline nlohmann::json to_json(const Permutation& p) {
  return nlohmann::json(std::vector<int>(p.one_line().begin(), p.one_line().end()));
}

inline nlohmann::json to_json(const SwapSet& s) {
  return nlohmann::json(std::vector<int>(s.positions().begin(), s.positions().end()));
}

inline nlohmann::json chain_to_json(const FactorChain& c, std::optional<Policy> policy = {}) {
  nlohmann::json j;
  j["schema"] = kChainSchema;
  if (policy) j["policy"] = to_string(*policy);
  j["input"] = to_json(c.input);
  j["factors"] = nlohmann::json::array();
  for (const SwapSet& b : c.factors) j["factors"].push_back(to_json(b));
  j["states"] = nlohmann::json::array();
  for (const Permutation& s : c.states) j["states"].push_back(to_json(s));
  const int w = bandwidth(c.input);
  j["length"] = c.length();
  j["bandwidth"] = w;
  if (w > 0) {
    j["bound"] = 2 * w - 1;
    j["within_bound"] = c.length() <= 2 * w - 1;
  } else {
    j["bound"] = 0;
    j["within_bound"] = c.length() == 0;
  }
  return j;
}

/// Reads input, factors and (when present) states; derived fields are ignored.
inline FactorChain chain_from_json(const nlohmann::json& j) {
  try {
    if (j.contains("schema") && j.at("schema").get<std::string>() != kChainSchema)
      throw MalformedInput("unsupported chain schema '" + j.at("schema").get<std::string>() + "'");
    Permutation input(j.at("input").get<std::vector<int>>());
    FactorChain c{input, {}, {}};
    for (const auto& f : j.at("factors"))
      c.factors.emplace_back(input.size(), f.get<std::vector<int>>());
    if (j.contains("states")) {
      for (const auto& s : j.at("states")) c.states.emplace_back(s.get<std::vector<int>>());
    } else {
      c.states.push_back(input);
      for (const SwapSet& b : c.factors) c.states.push_back(apply_swapset(b, c.states.back()));
    }
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw MalformedInput(std::string("chain JSON: ") + e.what());
  }
}

/// Dispatches on the first non-blank character: '{' means JSON.
inline FactorChain parse_chain(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw MalformedInput(std::string("chain JSON: ") + e.what());
    }
    return chain_from_json(j);
  }
  return parse_chain_text(text);
}

}  // namespace bandperm
