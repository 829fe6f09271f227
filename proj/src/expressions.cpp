#include "semirev/expressions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "semirev/rulespace.hpp"

namespace semirev {

namespace {

constexpr std::uint64_t kLcmLimit = std::uint64_t{1} << 24;

// For every residue c of n mod L, the smallest n >= 1 from which the class is
// covered, counting isolated points just below the expressions.
std::vector<std::optional<std::uint64_t>> class_starts(const ExpressionSet& expressions,
                                                       const std::set<std::uint64_t>& points,
                                                       std::uint64_t lcm) {
  std::vector<std::optional<std::uint64_t>> start(lcm);
  for (const auto& e : expressions) {
    for (std::uint64_t c = e.residue % lcm; c < lcm; c += e.modulus) {
      const std::uint64_t base = std::max<std::uint64_t>(e.min_n, 1);
      std::uint64_t first = base + (c + lcm - base % lcm) % lcm;
      if (!start[c] || first < *start[c]) start[c] = first;
    }
  }
  for (auto& s : start) {
    if (!s) continue;
    while (*s > lcm && points.count(*s - lcm)) *s -= lcm;
  }
  return start;
}

std::vector<std::uint64_t> divisors(std::uint64_t v) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 1; q * q <= v; ++q) {
    if (v % q) continue;
    out.push_back(q);
    if (q * q != v) out.push_back(v / q);
  }
  return out;
}

}  // namespace

IrreversibilityExpression IrreversibilityExpression::progression(std::uint64_t start, std::uint64_t modulus) {
  if (modulus == 0) throw std::invalid_argument("modulus must be at least 1");
  if (start == 0) throw std::invalid_argument("sizes start at 1");
  return {start % modulus, modulus, start};
}

IrreversibilityExpression IrreversibilityExpression::final_segment(std::uint64_t start) {
  return progression(start, 1);
}

bool IrreversibilityExpression::subset_of(const IrreversibilityExpression& other) const noexcept {
  return modulus % other.modulus == 0 && residue % other.modulus == other.residue && min_n >= other.min_n;
}

std::string IrreversibilityExpression::to_string() const {
  if (is_final_segment()) return "n ≥ " + std::to_string(min_n);
  return "n ≡ " + std::to_string(residue) + " (mod " + std::to_string(modulus) + "), n ≥ " +
         std::to_string(min_n);
}

std::string IrreversibilityExpression::short_form() const {
  if (is_final_segment()) return "n≥" + std::to_string(min_n);
  return "n=" + std::to_string(modulus) + "j+" + std::to_string(min_n);
}

ExpressionSet normalize(ExpressionSet expressions) {
  std::sort(expressions.begin(), expressions.end());
  expressions.erase(std::unique(expressions.begin(), expressions.end()), expressions.end());
  ExpressionSet out;
  for (std::size_t i = 0; i < expressions.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < expressions.size() && !redundant; ++j) {
      redundant = i != j && expressions[i].subset_of(expressions[j]);
    }
    if (!redundant) out.push_back(expressions[i]);
  }
  return out;
}

bool covered(const ExpressionSet& expressions, const std::set<std::uint64_t>& points, std::uint64_t n) {
  if (points.count(n)) return true;
  return std::any_of(expressions.begin(), expressions.end(),
                     [n](const IrreversibilityExpression& e) { return e.contains(n); });
}

std::optional<std::uint64_t> moduli_lcm(const ExpressionSet& expressions) {
  std::uint64_t l = 1;
  for (const auto& e : expressions) {
    l = std::lcm(l, e.modulus);
    if (l > kLcmLimit) return std::nullopt;
  }
  return l;
}

std::optional<std::uint64_t> cofinite_start(const ExpressionSet& expressions,
                                            const std::set<std::uint64_t>& points) {
  if (expressions.empty()) return std::nullopt;
  const auto lcm = moduli_lcm(expressions);
  if (!lcm) throw LimitExceeded("lcm of expression moduli too large");
  std::uint64_t last_gap = 0;
  for (const auto& s : class_starts(expressions, points, *lcm)) {
    if (!s) return std::nullopt;
    if (*s > *lcm) last_gap = std::max(last_gap, *s - *lcm);
  }
  return last_gap + 1;
}

ExpressionSet simplify(const ExpressionSet& expressions, std::set<std::uint64_t>& points) {
  ExpressionSet all = normalize(expressions);
  if (!all.empty()) {
    const auto lcm = moduli_lcm(all);
    if (!lcm) throw LimitExceeded("lcm of expression moduli too large");
    const auto start = class_starts(all, points, *lcm);
    std::set<std::uint64_t> steps;
    for (const auto& e : all) {
      for (auto q : divisors(e.modulus)) steps.insert(q);
    }
    ExpressionSet found;
    for (std::uint64_t q : steps) {
      for (std::uint64_t c = 0; c < q; ++c) {
        bool whole = true;
        std::uint64_t last_gap = 0;
        for (std::uint64_t sub = c; sub < *lcm && whole; sub += q) {
          if (!start[sub]) whole = false;
          else if (*start[sub] > *lcm) last_gap = std::max(last_gap, *start[sub] - *lcm);
        }
        if (!whole) continue;
        const std::uint64_t s = last_gap ? last_gap + q : (c ? c : q);
        found.push_back(IrreversibilityExpression::progression(s, q));
      }
    }
    all.insert(all.end(), found.begin(), found.end());
    all = normalize(std::move(all));
  }
  for (auto it = points.begin(); it != points.end();) {
    if (covered(all, {}, *it)) it = points.erase(it);
    else ++it;
  }
  return all;
}

}  // namespace semirev
