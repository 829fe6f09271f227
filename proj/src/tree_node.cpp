#include "semirev/tree_node.hpp"

#include <bit>
#include <sstream>

#include <boost/container_hash/hash.hpp>

namespace semirev {

std::size_t ipow(std::size_t base, int exp) {
  std::size_t v = 1;
  for (int i = 0; i < exp; ++i) v *= base;
  return v;
}

TreeNode::TreeNode(std::size_t set_count, std::size_t rmt_count)
    : sets_(set_count), rmts_(rmt_count), stride_((rmt_count + 63) / 64),
      words_(set_count * stride_, 0) {}

std::size_t TreeNode::size(std::size_t k) const {
  std::size_t c = 0;
  for (auto w : set_words(k)) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::size_t TreeNode::total() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool TreeNode::empty() const {
  for (auto w : words_) {
    if (w != 0) return false;
  }
  return true;
}

std::vector<Rmt> TreeNode::members(std::size_t k) const {
  std::vector<Rmt> out;
  auto ws = set_words(k);
  for (std::size_t i = 0; i < ws.size(); ++i) {
    std::uint64_t w = ws[i];
    while (w) {
      out.push_back(static_cast<Rmt>(i * 64 + static_cast<std::size_t>(std::countr_zero(w))));
      w &= w - 1;
    }
  }
  return out;
}

std::vector<std::uint8_t> TreeNode::encoding() const {
  std::vector<std::uint8_t> bytes;
  bytes.reserve(words_.size() * 8);
  for (auto w : words_) {
    for (int b = 0; b < 8; ++b) bytes.push_back(static_cast<std::uint8_t>(w >> (8 * b)));
  }
  return bytes;
}

std::size_t TreeNode::hash() const noexcept { return boost::hash_range(words_.begin(), words_.end()); }

std::string TreeNode::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t k = 0; k < sets_; ++k) {
    if (k) out << ", ";
    out << '{';
    bool first = true;
    for (Rmt r : members(k)) {
      if (!first) out << ',';
      out << r;
      first = false;
    }
    out << '}';
  }
  out << ')';
  return out.str();
}

TreeNode make_node(const RuleParams& params, const std::vector<std::vector<Rmt>>& sets) {
  TreeNode node(params.word_count(), params.rmt_count());
  if (sets.size() != params.word_count()) throw std::invalid_argument("expected d^(m-1) sets");
  for (std::size_t k = 0; k < sets.size(); ++k) {
    for (Rmt r : sets[k]) {
      if (r >= params.rmt_count()) throw std::out_of_range("RMT out of range");
      node.insert(k, r);
    }
  }
  return node;
}

NodeAlgebra::NodeAlgebra(const Rule& rule)
    : rule_(rule), words_(rule.params().word_count()), stride_((rule.rmt_count() + 63) / 64) {
  const auto& p = rule.params();
  const auto d = static_cast<std::size_t>(p.states);
  output_masks_.assign(d, std::vector<std::uint64_t>(stride_, 0));
  for (Rmt r = 0; r < rule.rmt_count(); ++r) {
    output_masks_[rule[r]][r >> 6] |= std::uint64_t{1} << (r & 63);
  }
  special_masks_.resize(static_cast<std::size_t>(p.neighborhood));
  for (int iota = 1; iota < p.neighborhood; ++iota) {
    const std::size_t modulus = ipow(d, p.neighborhood - iota);
    const std::size_t divisor = ipow(d, iota - 1);
    auto& masks = special_masks_[static_cast<std::size_t>(iota)];
    masks.assign(words_, std::vector<std::uint64_t>(stride_, 0));
    for (std::size_t k = 0; k < words_; ++k) {
      const std::size_t anchor = k / divisor;
      for (std::size_t r = anchor; r < rule.rmt_count(); r += modulus) {
        masks[k][r >> 6] |= std::uint64_t{1} << (r & 63);
      }
    }
  }
}

TreeNode NodeAlgebra::root() const {
  TreeNode node = empty_node();
  const auto d = static_cast<Rmt>(params().states);
  for (std::size_t k = 0; k < words_; ++k) {
    for (Rmt b = 0; b < d; ++b) node.insert(k, static_cast<Rmt>(k) * d + b);
  }
  return node;
}

TreeNode NodeAlgebra::empty_node() const { return TreeNode(words_, rule_.rmt_count()); }

std::pair<EdgeLabel, TreeNode> NodeAlgebra::child(const TreeNode& parent, State x) const {
  EdgeLabel edge{empty_node(), x};
  const auto& mask = output_masks_[x];
  for (std::size_t k = 0; k < words_; ++k) {
    auto src = parent.set_words(k);
    auto dst = edge.gamma.set_words(k);
    for (std::size_t i = 0; i < stride_; ++i) dst[i] = src[i] & mask[i];
  }
  return {std::move(edge), child_node(parent, x)};
}

TreeNode NodeAlgebra::child_node(const TreeNode& parent, State x) const {
  TreeNode out = empty_node();
  const auto& mask = output_masks_[x];
  const auto d = static_cast<Rmt>(params().states);
  const auto words = static_cast<Rmt>(words_);
  for (std::size_t k = 0; k < words_; ++k) {
    auto src = parent.set_words(k);
    for (std::size_t i = 0; i < stride_; ++i) {
      std::uint64_t w = src[i] & mask[i];
      while (w) {
        const auto r = static_cast<Rmt>(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
        // Sibl_{r mod d^(m-1)}
        const Rmt base = (r % words) * d;
        for (Rmt b = 0; b < d; ++b) out.insert(k, base + b);
      }
    }
  }
  return out;
}

std::size_t NodeAlgebra::edge_size(const TreeNode& parent, State x) const {
  const auto& mask = output_masks_[x];
  std::size_t c = 0;
  for (std::size_t k = 0; k < words_; ++k) {
    auto src = parent.set_words(k);
    for (std::size_t i = 0; i < stride_; ++i) c += static_cast<std::size_t>(std::popcount(src[i] & mask[i]));
  }
  return c;
}

TreeNode NodeAlgebra::restrict_special(const TreeNode& node, int iota) const {
  if (iota < 1 || iota >= params().neighborhood) {
    throw std::out_of_range("special level offset must lie in [1, m-1]");
  }
  TreeNode out = node;
  const auto& masks = special_masks_[static_cast<std::size_t>(iota)];
  for (std::size_t k = 0; k < words_; ++k) {
    auto dst = out.set_words(k);
    for (std::size_t i = 0; i < stride_; ++i) dst[i] &= masks[k][i];
  }
  return out;
}

std::vector<std::size_t> NodeAlgebra::histogram(const TreeNode& node) const {
  std::vector<std::size_t> h(output_masks_.size(), 0);
  for (std::size_t x = 0; x < h.size(); ++x) h[x] = edge_size(node, static_cast<State>(x));
  return h;
}

bool NodeAlgebra::is_balanced(const TreeNode& node) const {
  const auto h = histogram(node);
  for (auto c : h) {
    if (c != h.front()) return false;
  }
  return true;
}

bool NodeAlgebra::satisfies_intermediate(const TreeNode& node) const {
  return node.total() == rule_.rmt_count() && is_balanced(node);
}

bool NodeAlgebra::satisfies_special(const TreeNode& restricted, int iota) const {
  return restricted.total() == ipow(static_cast<std::size_t>(params().states), iota) &&
         is_balanced(restricted);
}

}  // namespace semirev
