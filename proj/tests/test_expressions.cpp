#include <doctest.h>

#include <algorithm>
#include <random>

#include "semirev/expressions.hpp"

using namespace semirev;
using E = IrreversibilityExpression;

namespace {

bool same_members(const ExpressionSet& a, const std::set<std::uint64_t>& pa, const ExpressionSet& b,
                  const std::set<std::uint64_t>& pb, std::uint64_t top) {
  for (std::uint64_t n = 1; n <= top; ++n) {
    if (covered(a, pa, n) != covered(b, pb, n)) return false;
  }
  return true;
}

ExpressionSet random_set(std::mt19937_64& rng) {
  ExpressionSet out;
  const auto k = rng() % 5;
  for (std::size_t i = 0; i < k; ++i) {
    const std::uint64_t mod = 1 + rng() % 6;
    out.push_back(E::progression(1 + rng() % 12, mod));
  }
  return out;
}

}  // namespace

TEST_SUITE("expressions") {

TEST_CASE("construction and membership") {
  const E e = E::progression(6, 2);
  CHECK(e.residue == 0);
  CHECK(e.modulus == 2);
  CHECK(e.min_n == 6);
  CHECK(e.contains(8));
  CHECK_FALSE(e.contains(4));
  CHECK_FALSE(e.contains(7));
  const E f = E::final_segment(4);
  CHECK(f.is_final_segment());
  CHECK(f == E{0, 1, 4});
  CHECK(E::progression(7, 3) == E{1, 3, 7});
  CHECK_THROWS((void)E::progression(3, 0));
}

TEST_CASE("text forms") {
  CHECK(E::progression(2, 2).to_string() == "n ≡ 0 (mod 2), n ≥ 2");
  CHECK(E::final_segment(4).to_string() == "n ≥ 4");
  CHECK(E::progression(2, 2).short_form() == "n=2j+2");
  CHECK(E::progression(7, 7).short_form() == "n=7j+7");
  CHECK(E::final_segment(3).short_form() == "n≥3");
}

TEST_CASE("subsets") {
  CHECK(E::progression(4, 2).subset_of(E::progression(2, 2)));
  CHECK(E::progression(6, 6).subset_of(E::progression(3, 3)));
  CHECK(E::progression(6, 2).subset_of(E::final_segment(5)));
  CHECK_FALSE(E::progression(2, 2).subset_of(E::progression(4, 2)));
  CHECK_FALSE(E::progression(3, 3).subset_of(E::progression(2, 2)));
}

TEST_CASE("normalize drops contained progressions") {
  const ExpressionSet in{E::progression(6, 2), E::progression(2, 2), E::progression(4, 2)};
  CHECK(normalize(in) == ExpressionSet{E::progression(2, 2)});
  const ExpressionSet two{E::progression(4, 2), E::progression(3, 3)};
  CHECK(normalize(two) == ExpressionSet{E::progression(4, 2), E::progression(3, 3)});
  CHECK(normalize({}).empty());
}

TEST_CASE("simplify merges residue classes") {
  std::set<std::uint64_t> points;
  const ExpressionSet odd_even{E::progression(2, 2), E::progression(3, 2)};
  CHECK(simplify(odd_even, points) == ExpressionSet{E::final_segment(2)});

  std::set<std::uint64_t> with_point{2};
  CHECK(simplify({E::progression(4, 2)}, with_point) == ExpressionSet{E::progression(2, 2)});
  CHECK(with_point.empty());

  std::set<std::uint64_t> lone{5};
  CHECK(simplify({E::final_segment(7)}, lone) == ExpressionSet{E::final_segment(7)});
  CHECK(lone == std::set<std::uint64_t>{5});
}

TEST_CASE("cofinite start") {
  CHECK(cofinite_start({E::progression(4, 2), E::progression(3, 2)}, {}) == 3);
  CHECK(cofinite_start({E::progression(4, 2), E::progression(3, 2)}, {1, 2}) == 1);
  CHECK_FALSE(cofinite_start({E::progression(2, 2)}, {}).has_value());
  CHECK_FALSE(cofinite_start({}, {3}).has_value());
}

TEST_CASE("moduli lcm") {
  CHECK(moduli_lcm({E::progression(2, 2), E::progression(3, 3)}) == 6);
  CHECK(moduli_lcm({}) == 1);
}

TEST_CASE("property: normalize is idempotent and order independent") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 300; ++trial) {
    auto set = random_set(rng);
    const auto once = normalize(set);
    CHECK(normalize(once) == once);
    std::shuffle(set.begin(), set.end(), rng);
    CHECK(normalize(set) == once);
    CHECK(same_members(set, {}, once, {}, 200));
  }
}

TEST_CASE("property: simplify keeps the member set") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const auto set = random_set(rng);
    std::set<std::uint64_t> points;
    for (std::size_t i = rng() % 4; i > 0; --i) points.insert(1 + rng() % 20);
    const auto before = points;
    auto after = points;
    const auto simple = simplify(set, after);
    CHECK(same_members(set, before, simple, after, 400));
    CHECK(normalize(simple) == simple);
    for (auto n : after) CHECK_FALSE(covered(simple, {}, n));
    auto again = after;
    CHECK(simplify(simple, again) == simple);
    CHECK(again == after);
  }
}

}
