#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "semirev/tree_node.hpp"

namespace semirev {

using NodeId = std::size_t;

/// A node of the minimized tree. `levels` is the anchored level set: its
/// smallest element i is where the node first appears, and each further
/// element i' marks a loop of period i' - i.
struct MinimizedNode {
  TreeNode gamma;
  std::size_t first_level = 0;
  std::vector<std::size_t> levels;
  std::vector<std::optional<NodeId>> children;  // one per next state; empty edge -> nullopt
  /// The anchored level set reproduces every level the node occupies.
  bool levels_exact = true;
};

struct Loop {
  std::size_t base;
  std::size_t period;
  friend bool operator==(const Loop&, const Loop&) = default;
};

/// Which unique nodes sit on each level of the unbounded tree. The sequence of
/// level populations is eventually periodic: level p >= preperiod holds the
/// same nodes as level preperiod + (p - preperiod) % period.
class LevelPopulation {
 public:
  LevelPopulation() = default;
  LevelPopulation(std::vector<std::vector<std::uint64_t>> sets, std::size_t preperiod,
                  std::size_t period);

  [[nodiscard]] bool contains(NodeId id, std::size_t level) const;
  [[nodiscard]] std::vector<NodeId> nodes_at(std::size_t level) const;
  [[nodiscard]] std::size_t preperiod() const noexcept { return preperiod_; }
  [[nodiscard]] std::size_t period() const noexcept { return period_; }
  /// preperiod + period: levels below this are stored explicitly.
  [[nodiscard]] std::size_t horizon() const noexcept { return sets_.size(); }

 private:
  [[nodiscard]] std::size_t fold(std::size_t level) const;
  std::vector<std::vector<std::uint64_t>> sets_;
  std::size_t preperiod_ = 0;
  std::size_t period_ = 1;
};

/// Where the construction would stop under the early-exit convention: the
/// first point at which the tree proves irreversibility for every n from
/// some size on. Either a new node fails the intermediate-level conditions
/// (all n >= level + m), or a node gains a self-loop and fails the
/// conditions of some level n - iota (all n >= first level + iota).
struct ViolationStop {
  enum class Kind { Intermediate, SelfLoop };
  Kind kind = Kind::Intermediate;
  NodeId node = 0;
  std::size_t level = 0;         // level being built when it was found
  std::size_t unique_nodes = 0;  // nodes created so far
  std::size_t irreversible_from = 0;
};

struct MinimizedTree {
  std::vector<MinimizedNode> nodes;  // nodes[0] is the root
  std::size_t height = 0;            // level at which the last unique node was added
  std::optional<ViolationStop> first_violation;
  /// False when built with stop_at_first_violation and the construction stopped.
  bool finished = true;
  LevelPopulation population;        // only when finished

  [[nodiscard]] std::size_t unique_nodes() const noexcept { return nodes.size(); }
  [[nodiscard]] std::optional<NodeId> find(const TreeNode& gamma) const;
};

struct MinimizedTreeOptions {
  std::size_t node_limit = 1'000'000;
  /// Levels of population tracked before giving up on periodicity.
  std::size_t level_limit = 1'000'000;
  bool stop_at_first_violation = false;
};

/// Breadth-first construction keeping only unique nodes. A child equal to an
/// existing node (same or earlier level) becomes a link to it; construction
/// ends at the first level that adds no new node.
[[nodiscard]] MinimizedTree build_minimized(const Rule& rule, const MinimizedTreeOptions& options = {});

/// Membership under the anchored-loop reading of a level set: p is a level,
/// or p = i + k (i' - i) for the minimum i and some larger i'.
[[nodiscard]] bool occurs_at_level(const std::vector<std::size_t>& levels, std::size_t p);
[[nodiscard]] bool occurs_at_level(NodeId id, const MinimizedTree& tree, std::size_t p);

[[nodiscard]] std::vector<Loop> loops_of(const std::vector<std::size_t>& levels);
[[nodiscard]] std::vector<Loop> loops_of(NodeId id, const MinimizedTree& tree);

[[nodiscard]] std::string export_minimized_dot(const MinimizedTree& tree);
[[nodiscard]] std::string minimized_tree_json(const MinimizedTree& tree, int indent = 2);

}  // namespace semirev
