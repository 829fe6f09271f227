#include <doctest.h>

#include <algorithm>
#include <random>

#include "semirev/dynamics.hpp"
#include "support.hpp"

using namespace semirev;
using semirev::testing::eca;
using semirev::testing::rule_of;

namespace {
const char* const kBalancedTernary = "012012120012210102201021102";
const char* const kLossyTernary = "222211112001000000110122221";
}  // namespace

TEST_SUITE("dynamics") {

TEST_CASE("rmt sequence of a ternary configuration") {
  const Rule r = rule_of(kBalancedTernary, 3, 3);
  const auto c = Configuration::from_string("1021", 3);
  CHECK(rmt_sequence(c, r) == RmtSequence{12, 11, 7, 22});
}

TEST_CASE("rmt sequence edge cases") {
  CHECK(rmt_sequence(Configuration::from_string("0000", 2), eca(110)) == RmtSequence{0, 0, 0, 0});
  CHECK(rmt_sequence(Configuration::from_string("1", 2), eca(110)) == RmtSequence{7});
}

TEST_CASE("one step") {
  CHECK(step(Configuration::from_string("1021", 3), rule_of(kBalancedTernary, 3, 3)).to_string() == "0101");
  CHECK(step(Configuration::from_string("0000", 2), eca(75)).to_string() == "1111");
  const auto c = Configuration::from_string("0110100", 2);
  CHECK(step(c, eca(204)) == c);
}

TEST_CASE("configuration codes") {
  for (std::uint64_t code = 0; code < 81; ++code) {
    CHECK(Configuration::from_code(code, 4, 3).code(3) == code);
  }
  CHECK(Configuration::from_string("1021", 3).to_string() == "1021");
}

TEST_CASE("predecessors") {
  const Rule r = rule_of(kLossyTernary, 3, 3);
  CHECK(predecessors(Configuration::from_code(5, 3, 3), r).empty());
  CHECK(predecessors(Configuration::from_code(8, 3, 3), r).size() >= 2);
  const auto c = Configuration::from_string("10110", 2);
  const auto pre = predecessors(c, eca(204));
  REQUIRE(pre.size() == 1);
  CHECK(pre.front() == c);
}

TEST_CASE("brute force reversibility") {
  CHECK(brute_force_reversible(rule_of(kBalancedTernary, 3, 3), 3));
  CHECK_FALSE(brute_force_reversible(rule_of(kLossyTernary, 3, 3), 3));
  CHECK_FALSE(brute_force_reversible(eca(75), 4));
  CHECK(brute_force_reversible(eca(75), 5));
  CHECK_THROWS_AS((void)brute_force_reversible(eca(75), 20, 1 << 10), LimitExceeded);
}

TEST_CASE("transition diagrams") {
  const auto id = transition_diagram(eca(204), 2);
  CHECK(id.edges.size() == 4);
  CHECK(std::all_of(id.edges.begin(), id.edges.end(), [](const TransitionEdge& e) { return e.from == e.to; }));

  const auto lossy = transition_diagram(rule_of(kLossyTernary, 3, 3), 3);
  CHECK(lossy.non_reachable() == std::vector<std::uint64_t>{5, 7, 11, 15, 17, 19, 21, 23, 25});
  const auto multi = lossy.multi_predecessor();
  for (std::uint64_t code : {8u, 13u, 20u, 24u}) CHECK(std::binary_search(multi.begin(), multi.end(), code));

  const auto odd = transition_diagram(eca(75), 3);
  CHECK(odd.edges.size() == 8);
  const auto deg = odd.in_degrees();
  CHECK(std::all_of(deg.begin(), deg.end(), [](std::size_t k) { return k == 1; }));
}

TEST_CASE("transition dot is deterministic") {
  const auto d = transition_diagram(eca(75), 3);
  const auto text = export_transition_dot(d);
  CHECK(text == export_transition_dot(transition_diagram(eca(75), 3)));
  CHECK(text.find("digraph") == 0);
}

TEST_CASE("property: step commutes with rotation") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int d = 2 + static_cast<int>(rng() % 2);
    const int m = 2 + static_cast<int>(rng() % 3);
    const Rule r = semirev::testing::random_rule(rng, d, m);
    const std::size_t n = 1 + rng() % 9;
    std::uint64_t configs = 1;
    for (std::size_t i = 0; i < n; ++i) configs *= static_cast<std::uint64_t>(d);
    const auto c = Configuration::from_code(rng() % configs, n, d);
    const std::size_t k = rng() % n;
    CHECK(step(shift(c, k), r) == shift(step(c, r), k));
  }
}

TEST_CASE("property: brute force agrees with the successor table") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const Rule r = semirev::testing::random_rule(rng, 2, 3);
    const std::size_t n = 1 + rng() % 10;
    auto succ = successor_table(r, n);
    std::sort(succ.begin(), succ.end());
    const bool perm = std::adjacent_find(succ.begin(), succ.end()) == succ.end();
    CHECK(brute_force_reversible(r, n) == perm);
  }
}

}
