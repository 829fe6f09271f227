#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "semirev/rulespace.hpp"

namespace semirev::testing {

inline Rule eca(unsigned decimal) { return parse_rule(std::to_string(decimal), RuleParams::make(2, 3)); }

inline Rule rule_of(const std::string& text, int d, int m) { return parse_rule(text, RuleParams::make(d, m)); }

inline Rule random_rule(std::mt19937_64& rng, int d, int m) {
  const RuleParams params = RuleParams::make(d, m);
  std::uniform_int_distribution<int> digit(0, d - 1);
  std::vector<State> table(params.rmt_count());
  for (auto& s : table) s = static_cast<State>(digit(rng));
  return Rule(params, std::move(table));
}

// A uniformly random rule with every output taking exactly d^(m-1) RMTs.
inline Rule random_balanced_rule(std::mt19937_64& rng, int d, int m) {
  const RuleParams params = RuleParams::make(d, m);
  std::vector<State> table(params.rmt_count());
  for (std::size_t i = 0; i < table.size(); ++i) table[i] = static_cast<State>(i % static_cast<std::size_t>(d));
  std::shuffle(table.begin(), table.end(), rng);
  return Rule(params, std::move(table));
}

}  // namespace semirev::testing
