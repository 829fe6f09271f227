#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "semirev/tree_node.hpp"

namespace semirev {

/// Cap on the number of root-to-leaf paths, d^n.
inline constexpr std::uint64_t kFullTreeLimit = std::uint64_t{1} << 62;

/// One level of a reachability tree. Equal nodes on a level are merged and
/// carry the number of tree nodes they stand for.
struct TreeLevel {
  std::vector<TreeNode> nodes;
  std::vector<std::uint64_t> multiplicity;
  // Over all edges leaving this level, empty ones included. Unset on the last level.
  std::size_t min_edge_rmts = 0;
  std::size_t max_edge_rmts = 0;
  bool has_empty_edge = false;
};

/// The (n+1)-level reachability tree of an n-cell ring. Empty edges are
/// pruned; `complete` records whether any existed.
struct FullTree {
  std::size_t cells = 0;
  std::vector<TreeLevel> levels;
  bool complete = true;

  /// Number of root-to-leaf paths, which equals the number of reachable
  /// configurations.
  [[nodiscard]] std::uint64_t leaf_count() const;
};

/// Levels n - iota (1 <= iota <= m-1, level >= 1) are built with the
/// wrap-around restriction. Completeness decides reversibility for n >= m.
[[nodiscard]] FullTree build_full_tree(const Rule& rule, std::size_t n,
                                       std::uint64_t limit = kFullTreeLimit);

/// Edge RMT counts: d^(m-1) on levels 0..n-m and d^(iota-1) on level n-iota.
[[nodiscard]] bool edge_count_conditions_hold(const FullTree& tree, const RuleParams& params);

/// Node RMT counts (d at level n, d^iota at level n-iota, d^m elsewhere) and
/// balance of every non-leaf node.
[[nodiscard]] bool node_conditions_hold(const FullTree& tree, const Rule& rule);

/// Requires n >= m.
[[nodiscard]] bool reversible_for_n_by_tree(const Rule& rule, std::size_t n);

/// Table-style listing of the distinct nodes on one level.
[[nodiscard]] std::string dump_level(const FullTree& tree, std::size_t level);

}  // namespace semirev
