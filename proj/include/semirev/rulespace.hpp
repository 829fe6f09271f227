#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace semirev {

using BigInt = boost::multiprecision::cpp_int;

/// Cell state in [0, d-1].
using State = std::uint8_t;

/// Rule min term: the neighborhood tuple (s_0, ..., s_{m-1}) read as a base-d
/// number with s_0 most significant.
using Rmt = std::uint32_t;

inline constexpr std::size_t kDefaultRmtLimit = 4096;

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class LimitExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Shape of the local map: d states, m neighbours split as l_r + 1 + r_r.
struct RuleParams {
  int states = 2;
  int neighborhood = 3;
  int left_radius = 1;
  int right_radius = 1;

  /// Validated constructor. When `left_radius` is absent the split is
  /// floor((m-1)/2) cells to the left.
  static RuleParams make(int states, int neighborhood,
                         std::optional<int> left_radius = std::nullopt,
                         std::size_t rmt_limit = kDefaultRmtLimit);

  /// d^m
  [[nodiscard]] std::size_t rmt_count() const;
  /// d^(m-1): number of de Bruijn nodes and of sibling / equivalent sets.
  [[nodiscard]] std::size_t word_count() const;

  friend bool operator==(const RuleParams&, const RuleParams&) = default;
};

/// Local map R as a lookup table indexed by RMT.
class Rule {
 public:
  Rule(RuleParams params, std::vector<State> table);

  [[nodiscard]] const RuleParams& params() const noexcept { return params_; }
  [[nodiscard]] std::span<const State> table() const noexcept { return table_; }
  [[nodiscard]] State operator[](Rmt r) const { return table_[r]; }
  [[nodiscard]] int states() const noexcept { return params_.states; }
  [[nodiscard]] int neighborhood() const noexcept { return params_.neighborhood; }
  [[nodiscard]] std::size_t rmt_count() const noexcept { return table_.size(); }

  /// Same table with a different l_r / r_r split.
  [[nodiscard]] Rule with_left_radius(int left_radius) const;

  friend bool operator==(const Rule&, const Rule&) = default;

 private:
  RuleParams params_;
  std::vector<State> table_;
};

/// Accepts either the d^m-character digit string R[d^m-1]...R[0] or a decimal
/// integer below d^(d^m). A string with a leading zero (and length > 1) is
/// always read as a digit string.
[[nodiscard]] Rule parse_rule(std::string_view text, const RuleParams& params);

/// Digit string, most significant RMT first.
[[nodiscard]] std::string format_rule(const Rule& rule);

/// Sum of R[r] * d^r.
[[nodiscard]] BigInt wolfram_decimal(const Rule& rule);

[[nodiscard]] Rmt rmt_of_tuple(std::span<const State> tuple, const RuleParams& params);
[[nodiscard]] std::vector<State> tuple_of_rmt(Rmt r, const RuleParams& params);

[[nodiscard]] bool is_balanced_rule(const Rule& rule);

/// Sibl_j = {d*j, ..., d*j + d - 1}
[[nodiscard]] std::vector<Rmt> sibling_set(const RuleParams& params, std::size_t j);
/// Equi_i = {i, d^(m-1) + i, ..., (d-1) d^(m-1) + i}
[[nodiscard]] std::vector<Rmt> equivalent_set(const RuleParams& params, std::size_t i);

/// The d RMTs (x, x, ..., x), ascending.
[[nodiscard]] std::vector<Rmt> uniform_rmts(const RuleParams& params);

/// Two uniform RMTs share a next state.
[[nodiscard]] bool is_strictly_irreversible(const Rule& rule);

/// Mirror image: R'(s_0..s_{m-1}) = R(s_{m-1}..s_0), radii swapped.
[[nodiscard]] Rule reflect(const Rule& rule);
/// State conjugation x -> d-1-x on inputs and output.
[[nodiscard]] Rule conjugate(const Rule& rule);

/// Rule whose table is the base-d expansion of `index` (index < d^(d^m)).
[[nodiscard]] Rule rule_from_index(const BigInt& index, const RuleParams& params);

char digit_char(int value);
int digit_value(char c);

}  // namespace semirev
