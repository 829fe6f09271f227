#include "semirev/mintree.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include <boost/container_hash/hash.hpp>
#include <json.hpp>

namespace semirev {

namespace {

using Bits = std::vector<std::uint64_t>;

struct BitsHash {
  std::size_t operator()(const Bits& b) const noexcept { return boost::hash_range(b.begin(), b.end()); }
};

constexpr std::size_t kLcmCap = std::size_t{1} << 20;

// Smallest iota whose level n - iota restriction of `node` fails.
std::optional<std::size_t> failing_offset(const NodeAlgebra& algebra, const TreeNode& node) {
  for (int iota = 1; iota < algebra.params().neighborhood; ++iota) {
    if (!algebra.satisfies_special(algebra.restrict_special(node, iota), iota)) {
      return static_cast<std::size_t>(iota);
    }
  }
  return std::nullopt;
}

LevelPopulation track_population(const std::vector<MinimizedNode>& nodes, std::size_t level_limit) {
  const std::size_t words = (nodes.size() + 63) / 64;
  std::vector<Bits> sets;
  std::unordered_map<Bits, std::size_t, BitsHash> seen;
  Bits cur(words, 0);
  cur[0] = 1;
  while (true) {
    auto [it, inserted] = seen.try_emplace(cur, sets.size());
    if (!inserted) {
      const std::size_t pre = it->second;
      const std::size_t period = sets.size() - pre;
      return LevelPopulation(std::move(sets), pre, period);
    }
    if (sets.size() >= level_limit) throw LimitExceeded("level population did not become periodic");
    sets.push_back(cur);
    Bits next(words, 0);
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t bits = cur[w];
      while (bits) {
        const std::size_t id = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        bits &= bits - 1;
        for (const auto& c : nodes[id].children) {
          if (c) next[*c >> 6] |= std::uint64_t{1} << (*c & 63);
        }
      }
    }
    cur = std::move(next);
  }
}

// Smallest anchored level set that predicts the node's occurrences, and
// whether the prediction is exact on every level.
void assign_levels(MinimizedTree& tree) {
  const auto& pop = tree.population;
  const std::size_t scan = pop.horizon() + pop.period();
  std::vector<std::vector<std::size_t>> occ(tree.nodes.size());
  for (std::size_t p = 0; p < scan; ++p) {
    for (NodeId id : pop.nodes_at(p)) occ[id].push_back(p);
  }
  for (NodeId id = 0; id < tree.nodes.size(); ++id) {
    auto& node = tree.nodes[id];
    node.levels.clear();
    for (std::size_t p : occ[id]) {
      if (node.levels.empty() || !occurs_at_level(node.levels, p)) node.levels.push_back(p);
    }
    std::size_t q = pop.period();
    for (const auto& loop : loops_of(node.levels)) {
      q = std::lcm(q, loop.period);
      if (q > kLcmCap) break;
    }
    if (q > kLcmCap) {
      node.levels_exact = false;
      continue;
    }
    const std::size_t top = std::max(pop.horizon(), node.levels.back() + 1) + q;
    node.levels_exact = true;
    for (std::size_t p = 0; p < top; ++p) {
      if (occurs_at_level(node.levels, p) != pop.contains(id, p)) {
        node.levels_exact = false;
        break;
      }
    }
  }
}

}  // namespace

LevelPopulation::LevelPopulation(std::vector<std::vector<std::uint64_t>> sets, std::size_t preperiod,
                                 std::size_t period)
    : sets_(std::move(sets)), preperiod_(preperiod), period_(period) {}

std::size_t LevelPopulation::fold(std::size_t level) const {
  if (level < sets_.size()) return level;
  return preperiod_ + (level - preperiod_) % period_;
}

bool LevelPopulation::contains(NodeId id, std::size_t level) const {
  const auto& s = sets_[fold(level)];
  const std::size_t w = id >> 6;
  return w < s.size() && ((s[w] >> (id & 63)) & 1U);
}

std::vector<NodeId> LevelPopulation::nodes_at(std::size_t level) const {
  std::vector<NodeId> out;
  const auto& s = sets_[fold(level)];
  for (std::size_t w = 0; w < s.size(); ++w) {
    std::uint64_t bits = s[w];
    while (bits) {
      out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

std::optional<NodeId> MinimizedTree::find(const TreeNode& gamma) const {
  for (NodeId id = 0; id < nodes.size(); ++id) {
    if (nodes[id].gamma == gamma) return id;
  }
  return std::nullopt;
}

MinimizedTree build_minimized(const Rule& rule, const MinimizedTreeOptions& options) {
  const NodeAlgebra algebra(rule);
  MinimizedTree tree;
  std::unordered_map<TreeNode, NodeId, TreeNodeHash> index;

  const auto m = static_cast<std::size_t>(rule.neighborhood());

  tree.nodes.push_back({algebra.root(), 0, {0}, {}, true});
  index.emplace(tree.nodes[0].gamma, 0);
  if (!algebra.satisfies_intermediate(tree.nodes[0].gamma)) {
    tree.first_violation = ViolationStop{ViolationStop::Kind::Intermediate, 0, 0, 1, m};
  }

  std::vector<NodeId> frontier{0};
  std::size_t level = 0;
  bool stop = options.stop_at_first_violation && tree.first_violation.has_value();
  while (!frontier.empty() && !stop) {
    std::vector<NodeId> next;
    for (NodeId u : frontier) {
      std::vector<std::optional<NodeId>> children;
      for (int x = 0; x < rule.states() && !stop; ++x) {
        TreeNode c = algebra.child_node(tree.nodes[u].gamma, static_cast<State>(x));
        if (c.empty()) {
          children.emplace_back(std::nullopt);
          continue;
        }
        auto it = index.find(c);
        if (it != index.end()) {
          children.emplace_back(it->second);
          if (it->second == u && !tree.first_violation) {
            if (auto iota = failing_offset(algebra, tree.nodes[u].gamma)) {
              const std::size_t base = tree.nodes[u].first_level;
              tree.first_violation = ViolationStop{ViolationStop::Kind::SelfLoop, u, level + 1,
                                                   tree.nodes.size(), base + *iota};
              stop = options.stop_at_first_violation;
            }
          }
          continue;
        }
        if (tree.nodes.size() >= options.node_limit) {
          throw LimitExceeded("minimized tree exceeds " + std::to_string(options.node_limit) + " nodes");
        }
        const NodeId id = tree.nodes.size();
        const bool violates = !algebra.satisfies_intermediate(c);
        index.emplace(c, id);
        tree.nodes.push_back({std::move(c), level + 1, {level + 1}, {}, true});
        children.emplace_back(id);
        next.push_back(id);
        if (violates && !tree.first_violation) {
          tree.first_violation = ViolationStop{ViolationStop::Kind::Intermediate, id, level + 1,
                                               tree.nodes.size(), level + 1 + m};
          stop = options.stop_at_first_violation;
        }
      }
      tree.nodes[u].children = std::move(children);
      if (stop) break;
    }
    frontier = std::move(next);
    ++level;
  }

  for (const auto& n : tree.nodes) tree.height = std::max(tree.height, n.first_level);
  if (stop) {
    tree.finished = false;
    return tree;
  }
  tree.population = track_population(tree.nodes, options.level_limit);
  assign_levels(tree);
  return tree;
}

bool occurs_at_level(const std::vector<std::size_t>& levels, std::size_t p) {
  if (levels.empty()) return false;
  if (std::find(levels.begin(), levels.end(), p) != levels.end()) return true;
  const std::size_t i = *std::min_element(levels.begin(), levels.end());
  if (p < i) return false;
  for (std::size_t other : levels) {
    if (other > i && (p - i) % (other - i) == 0) return true;
  }
  return false;
}

bool occurs_at_level(NodeId id, const MinimizedTree& tree, std::size_t p) {
  return occurs_at_level(tree.nodes.at(id).levels, p);
}

std::vector<Loop> loops_of(const std::vector<std::size_t>& levels) {
  std::vector<Loop> out;
  if (levels.size() < 2) return out;
  const std::size_t i = *std::min_element(levels.begin(), levels.end());
  for (std::size_t other : levels) {
    if (other > i) out.push_back({i, other - i});
  }
  std::sort(out.begin(), out.end(), [](const Loop& a, const Loop& b) { return a.period < b.period; });
  return out;
}

std::vector<Loop> loops_of(NodeId id, const MinimizedTree& tree) { return loops_of(tree.nodes.at(id).levels); }

std::string export_minimized_dot(const MinimizedTree& tree) {
  std::ostringstream out;
  out << "digraph minimized {\n";
  for (NodeId id = 0; id < tree.nodes.size(); ++id) {
    const auto& n = tree.nodes[id];
    out << "  " << id << " [label=\"" << id << "\\n" << n.gamma.to_string() << "\\nlevels {";
    for (std::size_t k = 0; k < n.levels.size(); ++k) out << (k ? "," : "") << n.levels[k];
    out << "}\"];\n";
  }
  for (NodeId id = 0; id < tree.nodes.size(); ++id) {
    const auto& n = tree.nodes[id];
    for (std::size_t x = 0; x < n.children.size(); ++x) {
      if (!n.children[x]) continue;
      const NodeId c = *n.children[x];
      out << "  " << id << " -> " << c << " [label=\"" << x << "\"";
      // links back to a node that already existed when the edge was found
      if (tree.nodes[c].first_level <= n.first_level) out << ", style=dashed";
      out << "];\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string minimized_tree_json(const MinimizedTree& tree, int indent) {
  nlohmann::ordered_json j;
  j["M"] = tree.unique_nodes();
  j["height"] = tree.height;
  j["finished"] = tree.finished;
  if (tree.finished) {
    j["population"] = {{"preperiod", tree.population.preperiod()}, {"period", tree.population.period()}};
  }
  auto& arr = j["nodes"] = nlohmann::ordered_json::array();
  for (NodeId id = 0; id < tree.nodes.size(); ++id) {
    const auto& n = tree.nodes[id];
    nlohmann::ordered_json node;
    node["id"] = id;
    node["levels"] = n.levels;
    auto gamma = nlohmann::ordered_json::array();
    for (std::size_t k = 0; k < n.gamma.set_count(); ++k) gamma.push_back(n.gamma.members(k));
    node["gamma"] = std::move(gamma);
    auto children = nlohmann::ordered_json::array();
    for (const auto& c : n.children) children.push_back(c ? nlohmann::ordered_json(*c) : nlohmann::ordered_json());
    node["children"] = std::move(children);
    arr.push_back(std::move(node));
  }
  return j.dump(indent);
}

}  // namespace semirev
