#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace semirev {

/// The sizes {n : n >= min_n, n = residue (mod modulus)}. A final segment
/// n >= s has modulus 1 and residue 0.
struct IrreversibilityExpression {
  std::uint64_t residue = 0;
  std::uint64_t modulus = 1;
  std::uint64_t min_n = 1;

  /// Progression through `start` with step `modulus` (modulus >= 1, start >= 1).
  [[nodiscard]] static IrreversibilityExpression progression(std::uint64_t start, std::uint64_t modulus);
  [[nodiscard]] static IrreversibilityExpression final_segment(std::uint64_t start);

  [[nodiscard]] bool contains(std::uint64_t n) const noexcept {
    return n >= min_n && n % modulus == residue;
  }
  [[nodiscard]] bool is_final_segment() const noexcept { return modulus == 1; }
  [[nodiscard]] bool subset_of(const IrreversibilityExpression& other) const noexcept;

  /// "n ≡ 0 (mod 2), n ≥ 2" or "n ≥ 4"
  [[nodiscard]] std::string to_string() const;
  /// "n=2j+2" or "n≥4"
  [[nodiscard]] std::string short_form() const;

  friend bool operator==(const IrreversibilityExpression&, const IrreversibilityExpression&) = default;
  friend auto operator<=>(const IrreversibilityExpression& a, const IrreversibilityExpression& b) {
    if (a.modulus != b.modulus) return a.modulus <=> b.modulus;
    if (a.residue != b.residue) return a.residue <=> b.residue;
    return a.min_n <=> b.min_n;
  }
};

using ExpressionSet = std::vector<IrreversibilityExpression>;

/// Sorted, deduplicated, and with every expression that is contained in
/// another one removed.
[[nodiscard]] ExpressionSet normalize(ExpressionSet expressions);

/// Whether n lies in some expression or in `points`.
[[nodiscard]] bool covered(const ExpressionSet& expressions, const std::set<std::uint64_t>& points,
                           std::uint64_t n);

/// Smallest s with every n >= s covered, if the uncovered sizes are finite.
[[nodiscard]] std::optional<std::uint64_t> cofinite_start(const ExpressionSet& expressions,
                                                          const std::set<std::uint64_t>& points);

/// Rewrites a union of progressions and isolated sizes in its coarsest
/// form: every progression whose step divides one of the given moduli and
/// which lies inside the union is added at its earliest start, then the set
/// is normalized. Points covered by the result are dropped from `points`.
[[nodiscard]] ExpressionSet simplify(const ExpressionSet& expressions, std::set<std::uint64_t>& points);

/// lcm of the moduli, or nullopt above the working limit.
[[nodiscard]] std::optional<std::uint64_t> moduli_lcm(const ExpressionSet& expressions);

}  // namespace semirev
