#include "semirev/rtree.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <unordered_map>

namespace semirev {

namespace {

// iota for level `level` of an n-level tree, or 0 for unrestricted levels.
int special_offset(std::size_t level, std::size_t n, int m) {
  if (level == 0 || level >= n) return 0;
  const std::size_t iota = n - level;
  return iota < static_cast<std::size_t>(m) ? static_cast<int>(iota) : 0;
}

}  // namespace

std::uint64_t FullTree::leaf_count() const {
  if (levels.empty()) return 0;
  std::uint64_t total = 0;
  for (auto c : levels.back().multiplicity) total += c;
  return total;
}

FullTree build_full_tree(const Rule& rule, std::size_t n, std::uint64_t limit) {
  if (n == 0) throw std::invalid_argument("lattice size must be at least 1");
  std::uint64_t paths = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (paths > limit / static_cast<std::uint64_t>(rule.states())) {
      throw LimitExceeded("d^n exceeds the reachability tree limit");
    }
    paths *= static_cast<std::uint64_t>(rule.states());
  }

  const NodeAlgebra algebra(rule);
  const int m = rule.neighborhood();
  FullTree tree;
  tree.cells = n;
  tree.levels.resize(n + 1);
  tree.levels[0].nodes.push_back(algebra.root());
  tree.levels[0].multiplicity.push_back(1);

  for (std::size_t i = 0; i < n; ++i) {
    TreeLevel& cur = tree.levels[i];
    TreeLevel& next = tree.levels[i + 1];
    std::unordered_map<TreeNode, std::size_t, TreeNodeHash> index;
    const int iota = special_offset(i + 1, n, m);
    cur.min_edge_rmts = std::numeric_limits<std::size_t>::max();
    cur.max_edge_rmts = 0;
    for (std::size_t j = 0; j < cur.nodes.size(); ++j) {
      for (int x = 0; x < rule.states(); ++x) {
        const auto state = static_cast<State>(x);
        const std::size_t edge = algebra.edge_size(cur.nodes[j], state);
        cur.min_edge_rmts = std::min(cur.min_edge_rmts, edge);
        cur.max_edge_rmts = std::max(cur.max_edge_rmts, edge);
        if (edge == 0) {
          cur.has_empty_edge = true;
          tree.complete = false;
          continue;
        }
        TreeNode child = algebra.child_node(cur.nodes[j], state);
        if (iota > 0) child = algebra.restrict_special(child, iota);
        auto [it, inserted] = index.try_emplace(child, next.nodes.size());
        if (inserted) {
          next.nodes.push_back(std::move(child));
          next.multiplicity.push_back(0);
        }
        next.multiplicity[it->second] += cur.multiplicity[j];
      }
    }
  }
  return tree;
}

bool edge_count_conditions_hold(const FullTree& tree, const RuleParams& params) {
  const std::size_t n = tree.cells;
  const auto d = static_cast<std::size_t>(params.states);
  const int m = params.neighborhood;
  for (std::size_t i = 0; i < n; ++i) {
    const int iota = special_offset(i, n, m);
    const std::size_t expected = iota > 0 ? ipow(d, iota - 1) : ipow(d, m - 1);
    const auto& level = tree.levels[i];
    if (level.nodes.empty()) return false;
    if (level.min_edge_rmts != expected || level.max_edge_rmts != expected) return false;
  }
  return true;
}

bool node_conditions_hold(const FullTree& tree, const Rule& rule) {
  const NodeAlgebra algebra(rule);
  const std::size_t n = tree.cells;
  const auto d = static_cast<std::size_t>(rule.states());
  const int m = rule.neighborhood();
  for (std::size_t i = 0; i <= n; ++i) {
    const int iota = special_offset(i, n, m);
    std::size_t expected = ipow(d, m);
    if (i == n) expected = d;
    else if (iota > 0) expected = ipow(d, iota);
    const auto& level = tree.levels[i];
    if (level.nodes.empty()) return false;
    for (const auto& node : level.nodes) {
      if (node.total() != expected) return false;
      if (i < n && !algebra.is_balanced(node)) return false;
    }
  }
  return true;
}

bool reversible_for_n_by_tree(const Rule& rule, std::size_t n) {
  if (n < static_cast<std::size_t>(rule.neighborhood())) {
    throw std::invalid_argument("tree decision requires n >= m");
  }
  return build_full_tree(rule, n).complete;
}

std::string dump_level(const FullTree& tree, std::size_t level) {
  std::ostringstream out;
  const auto& lv = tree.levels.at(level);
  for (std::size_t j = 0; j < lv.nodes.size(); ++j) {
    out << "level " << level << " node " << j << " x" << lv.multiplicity[j] << " = "
        << lv.nodes[j].to_string() << " rmts=" << lv.nodes[j].total() << "\n";
  }
  return out.str();
}

}  // namespace semirev
