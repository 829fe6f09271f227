#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "semirev/rulespace.hpp"

namespace semirev {

/// Ordered list of d^(m-1) RMT sets Gamma_0 .. Gamma_{d^(m-1)-1}, stored as
/// one bitset of d^m bits per set. Equality and hashing use the packed words,
/// which double as the canonical encoding.
class TreeNode {
 public:
  TreeNode() = default;
  TreeNode(std::size_t set_count, std::size_t rmt_count);

  [[nodiscard]] std::size_t set_count() const noexcept { return sets_; }
  [[nodiscard]] std::size_t rmt_count() const noexcept { return rmts_; }

  [[nodiscard]] bool contains(std::size_t k, Rmt r) const {
    return (words_[k * stride_ + (r >> 6)] >> (r & 63)) & 1U;
  }
  void insert(std::size_t k, Rmt r) { words_[k * stride_ + (r >> 6)] |= std::uint64_t{1} << (r & 63); }

  /// |Gamma_k|
  [[nodiscard]] std::size_t size(std::size_t k) const;
  /// Sum of |Gamma_k| over k: the node's RMT count.
  [[nodiscard]] std::size_t total() const;
  [[nodiscard]] bool empty() const;
  [[nodiscard]] std::vector<Rmt> members(std::size_t k) const;

  [[nodiscard]] std::span<const std::uint64_t> words() const noexcept { return words_; }
  [[nodiscard]] std::span<const std::uint64_t> set_words(std::size_t k) const {
    return {words_.data() + k * stride_, stride_};
  }
  [[nodiscard]] std::span<std::uint64_t> set_words(std::size_t k) {
    return {words_.data() + k * stride_, stride_};
  }
  [[nodiscard]] std::size_t stride() const noexcept { return stride_; }

  /// Little-endian bytes of the packed bitsets.
  [[nodiscard]] std::vector<std::uint8_t> encoding() const;
  [[nodiscard]] std::size_t hash() const noexcept;

  /// "({0,1}, {}, {4,5})"
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const TreeNode& a, const TreeNode& b) { return a.words_ == b.words_; }

 private:
  std::size_t sets_ = 0;
  std::size_t rmts_ = 0;
  std::size_t stride_ = 0;
  std::vector<std::uint64_t> words_;
};

struct TreeNodeHash {
  std::size_t operator()(const TreeNode& n) const noexcept { return n.hash(); }
};

/// Edge of a reachability tree: the RMTs of the parent whose next state is
/// `state`, still grouped by Gamma index.
struct EdgeLabel {
  TreeNode gamma;
  State state = 0;
};

/// Rule-bound operations on tree nodes. Precomputes the per-state output
/// masks and the wrap-around masks of the special levels.
class NodeAlgebra {
 public:
  explicit NodeAlgebra(const Rule& rule);

  [[nodiscard]] const Rule& rule() const noexcept { return rule_; }
  [[nodiscard]] const RuleParams& params() const noexcept { return rule_.params(); }

  /// Gamma_k = Sibl_k
  [[nodiscard]] TreeNode root() const;
  [[nodiscard]] TreeNode empty_node() const;

  /// Edge for next state x and the child it leads to.
  [[nodiscard]] std::pair<EdgeLabel, TreeNode> child(const TreeNode& parent, State x) const;
  /// Child only; skips materialising the edge label.
  [[nodiscard]] TreeNode child_node(const TreeNode& parent, State x) const;
  [[nodiscard]] std::size_t edge_size(const TreeNode& parent, State x) const;

  /// Wrap-around restriction for level n - iota, 1 <= iota <= m-1: Gamma_k
  /// keeps the RMTs whose last m - iota digits equal the first m - iota digits
  /// of the word k.
  [[nodiscard]] TreeNode restrict_special(const TreeNode& node, int iota) const;

  /// RMT count per next-state value.
  [[nodiscard]] std::vector<std::size_t> histogram(const TreeNode& node) const;
  [[nodiscard]] bool is_balanced(const TreeNode& node) const;

  /// Node at an unrestricted level of a complete tree: d^m RMTs, balanced.
  [[nodiscard]] bool satisfies_intermediate(const TreeNode& node) const;
  /// Node at level n - iota of a complete tree: d^iota RMTs, balanced.
  [[nodiscard]] bool satisfies_special(const TreeNode& restricted, int iota) const;

 private:
  Rule rule_;
  std::size_t words_ = 0;
  std::size_t stride_ = 0;
  std::vector<std::vector<std::uint64_t>> output_masks_;  // [state][word]
  // [iota][k] -> mask over RMTs
  std::vector<std::vector<std::vector<std::uint64_t>>> special_masks_;
};

[[nodiscard]] inline std::pair<EdgeLabel, TreeNode> child_node(const TreeNode& parent, State x,
                                                               const Rule& rule) {
  return NodeAlgebra(rule).child(parent, x);
}

[[nodiscard]] inline TreeNode restrict_special(const TreeNode& node, int iota, const Rule& rule) {
  return NodeAlgebra(rule).restrict_special(node, iota);
}

/// Builds a node from explicit sets, e.g. the rows of a printed table.
[[nodiscard]] TreeNode make_node(const RuleParams& params, const std::vector<std::vector<Rmt>>& sets);

std::size_t ipow(std::size_t base, int exp);

}  // namespace semirev
