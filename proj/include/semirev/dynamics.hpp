#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "semirev/rulespace.hpp"

namespace semirev {

/// Default cap on d^n for exhaustive enumeration.
inline constexpr std::uint64_t kBruteForceLimit = std::uint64_t{1} << 24;

/// A ring of n cells. The decimal code reads cell 0 as the most significant
/// base-d digit.
struct Configuration {
  std::vector<State> cells;

  [[nodiscard]] std::size_t size() const noexcept { return cells.size(); }
  [[nodiscard]] std::uint64_t code(int states) const;
  [[nodiscard]] static Configuration from_code(std::uint64_t code, std::size_t n, int states);
  /// Parses "1021" style digit strings.
  [[nodiscard]] static Configuration from_string(std::string_view digits, int states);
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Configuration&, const Configuration&) = default;
};

using RmtSequence = std::vector<Rmt>;

/// r_i = (x_{i-l_r}, ..., x_{i+r_r}) with indices taken mod n. For n < m a
/// cell may be read more than once by the same RMT.
[[nodiscard]] RmtSequence rmt_sequence(const Configuration& config, const Rule& rule);

[[nodiscard]] Configuration step(const Configuration& config, const Rule& rule);

/// Left rotation by `offset` cells.
[[nodiscard]] Configuration shift(const Configuration& config, std::size_t offset);

/// All y with step(y) == config.
[[nodiscard]] std::vector<Configuration> predecessors(const Configuration& config, const Rule& rule,
                                                      std::uint64_t limit = kBruteForceLimit);

/// Successor code of every configuration code in [0, d^n).
[[nodiscard]] std::vector<std::uint64_t> successor_table(const Rule& rule, std::size_t n,
                                                         std::uint64_t limit = kBruteForceLimit);

/// G_n injective on all d^n configurations, by duplicate detection.
[[nodiscard]] bool brute_force_reversible(const Rule& rule, std::size_t n,
                                          std::uint64_t limit = kBruteForceLimit);

struct TransitionEdge {
  std::uint64_t from;
  std::uint64_t to;
};

struct TransitionDiagram {
  std::size_t cells = 0;
  int states = 2;
  std::vector<TransitionEdge> edges;  // ascending `from`

  [[nodiscard]] std::vector<std::size_t> in_degrees() const;
  [[nodiscard]] std::vector<std::uint64_t> non_reachable() const;
  [[nodiscard]] std::vector<std::uint64_t> multi_predecessor() const;
};

[[nodiscard]] TransitionDiagram transition_diagram(const Rule& rule, std::size_t n,
                                                   std::uint64_t limit = kBruteForceLimit);

/// Graphviz digraph, nodes labelled by decimal configuration code in
/// ascending order.
[[nodiscard]] std::string export_transition_dot(const TransitionDiagram& diagram);

}  // namespace semirev
