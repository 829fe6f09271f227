#include <doctest.h>

#include <fstream>
#include <random>

#include "semirev/classifier.hpp"
#include "semirev/debruijn.hpp"
#include "semirev/dynamics.hpp"
#include "semirev/report.hpp"
#include "semirev/rtree.hpp"
#include "support.hpp"

using namespace semirev;
using semirev::testing::eca;
using semirev::testing::rule_of;
using E = IrreversibilityExpression;

namespace {
using Sizes = std::vector<std::uint64_t>;
const char* const kTwoProgressions = "012210210102012102210210012";
}  // namespace

TEST_SUITE("classifier") {

TEST_CASE("class names") {
  CHECK(to_string(ReversibilityClass::NonTriviallySemiReversible) == "NonTriviallySemiReversible");
  CHECK(parse_class("strict") == ReversibilityClass::StrictlyIrreversible);
  CHECK(parse_class("TriviallySemiReversible") == ReversibilityClass::TriviallySemiReversible);
  CHECK_FALSE(parse_class("sometimes").has_value());
}

TEST_CASE("shortcut classes") {
  const auto r = classify(eca(30));
  CHECK(r.cls == ReversibilityClass::StrictlyIrreversible);
  CHECK(r.method == DecisionMethod::StrictShortcut);
  CHECK_FALSE(r.tree.has_value());
  CHECK(r.expressions == ExpressionSet{E::final_segment(1)});
  const auto u = classify(eca(1));
  CHECK(u.cls == ReversibilityClass::TriviallySemiReversible);
  CHECK(u.method == DecisionMethod::UnbalancedShortcut);
  CHECK(u.expressions.back().is_final_segment());
  CHECK(u.expressions.back().min_n <= 3);
}

TEST_CASE("irreversibility proved before the tree is finished") {
  const auto c = classify(eca(43));
  CHECK(c.cls == ReversibilityClass::TriviallySemiReversible);
  CHECK(c.method == DecisionMethod::TreeCertificate);
  CHECK_FALSE(c.full_tree.has_value());
  CHECK(reversible_sizes(c, 12) == Sizes{1, 2, 3});
}

TEST_CASE("elementary examples") {
  CHECK(classify(eca(51)).cls == ReversibilityClass::Reversible);
  const auto c75 = classify(eca(75));
  CHECK(c75.cls == ReversibilityClass::NonTriviallySemiReversible);
  CHECK(c75.expressions == ExpressionSet{E::progression(2, 2)});
  CHECK(c75.tree == TreeStats{21, 5});
  CHECK(c75.verified_up_to == 24);
  CHECK(c75.brute_force_up_to == 14);
  CHECK(classify(eca(150)).expressions == ExpressionSet{E::progression(3, 3)});
  CHECK(classify(eca(45)).expressions == ExpressionSet{E::progression(2, 2)});
}

TEST_CASE("scan of finished trees") {
  // The scan covers n >= m; n = 2 comes from brute force in classify.
  const auto s75 = scan_violations(build_minimized(eca(75)), eca(75));
  CHECK(s75.expressions == ExpressionSet{E::progression(4, 2)});
  std::set<std::uint64_t> small{2};
  CHECK(simplify(s75.expressions, small) == ExpressionSet{E::progression(2, 2)});
  CHECK(scan_violations(build_minimized(eca(150)), eca(150)).expressions == ExpressionSet{E::progression(3, 3)});
  const Rule r = rule_of("1010101010101010", 2, 4);
  const auto scan = scan_violations(build_minimized(r), r);
  CHECK(scan.expressions.empty());
  CHECK(scan.isolated.empty());
  CHECK(scan.violating_nodes.empty());
}

TEST_CASE("reversible sizes") {
  CHECK(reversible_sizes(classify(eca(75)), 10) == Sizes{1, 3, 5, 7, 9});
  CHECK(reversible_sizes(classify(eca(105)), 9) == Sizes{1, 2, 4, 5, 7, 8});
  CHECK(reversible_sizes(classify(eca(204)), 5) == Sizes{1, 2, 3, 4, 5});
  // n = 2 is irreversible by brute force but no progression from 2 fits.
  CHECK(reversible_sizes(classify(eca(172)), 10) == Sizes{1, 3});
}

TEST_CASE("single sizes far out") {
  const auto c45 = classify(eca(45));
  CHECK(is_reversible_for(c45, 999));
  CHECK_FALSE(is_reversible_for(c45, 1000));
  const auto c150 = classify(eca(150));
  CHECK_FALSE(is_reversible_for(c150, 12));
  CHECK(is_reversible_for(c150, 13));
  CHECK_THROWS((void)is_reversible_for(c150, 0));
}

TEST_CASE("ternary rule with two progressions") {
  const auto c = classify(rule_of(kTwoProgressions, 3, 3));
  CHECK(c.cls == ReversibilityClass::NonTriviallySemiReversible);
  // n = 2 is already irreversible, so the even progression starts there.
  CHECK(brute_force_reversible(c.rule, 2) == false);
  CHECK(c.expressions == ExpressionSet{E::progression(2, 2), E::progression(3, 3)});
  CHECK(expressions_from(c, 3) == ExpressionSet{E::progression(4, 2), E::progression(3, 3)});
}

TEST_CASE("four neighbour rules") {
  const auto c = classify(rule_of("0101101010100101", 2, 4));
  CHECK(c.expressions == ExpressionSet{E::progression(7, 7)});
  CHECK(c.tree == TreeStats{56, 9});
  CHECK(classify(rule_of("0000111101001110", 2, 4)).cls == ReversibilityClass::StrictlyIrreversible);
  CHECK(classify(rule_of("1010101010101010", 2, 4)).cls == ReversibilityClass::Reversible);
}

TEST_CASE("equivalence classes") {
  CHECK(wolfram_decimal(minimal_equivalent(eca(75))) == 45);
  CHECK(wolfram_decimal(minimal_equivalent(eca(150))) == 150);
  CHECK(wolfram_decimal(minimal_equivalent(eca(154))) == 154);
  CHECK(wolfram_decimal(minimal_equivalent(eca(166))) == 154);
  CHECK(equivalents(eca(204)).size() == 1);
  CHECK(equivalents(eca(30)).size() == 4);
}

TEST_CASE("mismatch reporting") {
  const OracleMismatch e("brute force", 2, {true, true}, {true, false});
  CHECK(e.size() == 2);
  CHECK(mismatch_text(eca(75), e).find("RR") != std::string::npos);
  const auto j = mismatch_json(eca(75), e);
  CHECK(j["error"] == "oracle-mismatch");
  CHECK(j["n"] == 2);
}

TEST_CASE("json and table output") {
  const auto c = classify(eca(75));
  const auto j = classification_json(c);
  CHECK(j["rule"] == "01001011");
  CHECK(j["decimal"] == 75);
  CHECK(j["class"] == "NonTriviallySemiReversible");
  CHECK(j["expressions"].size() == 1);
  CHECK(j["expressions"][0]["modulus"] == 2);
  CHECK(j["tree"]["unique_nodes"] == 21);
  CHECK(j["expression_text"] == "n=2j+2");
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(std::vector<std::string>(keys.begin(), keys.begin() + 9) ==
        std::vector<std::string>{"rule", "d", "m", "decimal", "class", "expressions", "small_n_reversible", "tree",
                                 "verified_up_to"});
  CHECK(expression_summary(classify(eca(30))) == "∀n");
  CHECK(expression_summary(classify(eca(51))) == "∅");
  CHECK(expression_summary(classify(eca(172))) == "n≥4, n=2");
  const auto table = classification_table({c, classify(eca(30))});
  CHECK(table.find("NA") != std::string::npos);
  CHECK(table.find("21") != std::string::npos);
  const auto h = histogram({c, classify(eca(30))});
  CHECK(h.size() == 4);
  CHECK(h.at(ReversibilityClass::Reversible) == 0);
}

TEST_CASE("property: the verdict does not depend on the neighbourhood anchor") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    const int m = 2 + static_cast<int>(trial % 3);
    const int d = m == 4 ? 2 : 2 + static_cast<int>(rng() % 2);
    const Rule r = semirev::testing::random_balanced_rule(rng, d, m);
    const auto base = classify(r);
    for (int left = 0; left < m; ++left) {
      const auto shifted = classify(r.with_left_radius(left));
      CHECK(shifted.cls == base.cls);
      CHECK(reversible_sizes(shifted, 40) == reversible_sizes(base, 40));
    }
  }
}

TEST_CASE("property: level populations decide each size like the full tree") {
  std::mt19937_64 rng(43);
  int trees = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const int m = 3 + static_cast<int>(trial % 2);
    const Rule r = semirev::testing::random_balanced_rule(rng, 2, m);
    MinimizedTree tree;
    try {
      MinimizedTreeOptions opt;
      opt.node_limit = 20'000;
      tree = build_minimized(r, opt);
    } catch (const LimitExceeded&) {
      continue;
    }
    ++trees;
    for (std::size_t n = static_cast<std::size_t>(m); n <= 12; ++n) {
      CHECK(reversible_for_n_by_minimized(tree, r, n) == reversible_for_n_by_tree(r, n));
    }
  }
  CHECK(trees > 20);
}

}

TEST_SUITE("report") {

TEST_CASE("reports match the golden files") {
  const std::vector<std::pair<std::string, Rule>> cases = {
      {"eca75.json", eca(75)},
      {"ternary_two_progressions.json", rule_of(kTwoProgressions, 3, 3)},
  };
  for (const auto& [file, rule] : cases) {
    std::ifstream in(std::string(SEMIREV_GOLDEN_DIR) + "/" + file);
    REQUIRE(in.good());
    const Json golden = Json::parse(in);
    CAPTURE(file);
    CHECK(classification_json(classify(rule)) == golden);
  }
}

TEST_CASE("reports are deterministic") {
  const Rule r = rule_of("0101101010100101", 2, 4);
  CHECK(classification_json(classify(r)).dump() == classification_json(classify(r)).dump());
}

TEST_CASE("two neighbour binary family against brute force") {
  const auto params = RuleParams::make(2, 2);
  for (unsigned i = 0; i < 16; ++i) {
    const Rule r = rule_from_index(BigInt(i), params);
    const auto sizes = reversible_sizes(classify(r), 10);
    for (std::uint64_t n = 1; n <= 10; ++n) {
      CHECK(std::binary_search(sizes.begin(), sizes.end(), n) == brute_force_reversible(r, n));
    }
  }
}

}
