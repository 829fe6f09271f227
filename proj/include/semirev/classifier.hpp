#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "semirev/expressions.hpp"
#include "semirev/mintree.hpp"
#include "semirev/rulespace.hpp"

namespace semirev {

enum class ReversibilityClass {
  Reversible,
  StrictlyIrreversible,
  TriviallySemiReversible,
  NonTriviallySemiReversible,
};

[[nodiscard]] std::string_view to_string(ReversibilityClass c) noexcept;
/// Accepts the enum names and the short forms reversible, strict, trivial,
/// nontrivial.
[[nodiscard]] std::optional<ReversibilityClass> parse_class(std::string_view text);
[[nodiscard]] inline bool is_semi_reversible(ReversibilityClass c) noexcept {
  return c == ReversibilityClass::TriviallySemiReversible || c == ReversibilityClass::NonTriviallySemiReversible;
}

/// The classifier and an oracle disagree for some checked n. Both verdict
/// tables are kept, index 0 being n = 1.
class OracleMismatch : public std::runtime_error {
 public:
  OracleMismatch(std::string method, std::size_t n, std::vector<bool> classifier, std::vector<bool> oracle);

  [[nodiscard]] const std::string& method() const noexcept { return method_; }
  [[nodiscard]] std::size_t size() const noexcept { return n_; }
  [[nodiscard]] const std::vector<bool>& classifier_verdicts() const noexcept { return classifier_; }
  [[nodiscard]] const std::vector<bool>& oracle_verdicts() const noexcept { return oracle_; }

 private:
  std::string method_;
  std::size_t n_;
  std::vector<bool> classifier_;
  std::vector<bool> oracle_;
};

struct ScanResult {
  ExpressionSet expressions;     // only sizes n >= m
  std::set<std::uint64_t> isolated;  // single sizes n >= m outside any progression
  std::vector<NodeId> violating_nodes;
};

/// Irreversible sizes n >= m read off a finished minimized tree. A node on
/// level p breaks every n >= p + m if it fails the intermediate conditions,
/// and breaks n = p + iota if its level n - iota restriction fails.
[[nodiscard]] ScanResult scan_violations(const MinimizedTree& tree, const Rule& rule);

/// Per-size decision from the minimized tree's level populations; n >= m.
[[nodiscard]] bool reversible_for_n_by_minimized(const MinimizedTree& tree, const Rule& rule, std::size_t n);

/// How the irreversible sizes were obtained. TreeCertificate: the minimized
/// tree proved irreversibility from some size on and the smaller sizes were
/// decided with full reachability trees. PairWalks is the fallback when the
/// minimized tree outgrows the node limit without such a proof.
enum class DecisionMethod { StrictShortcut, UnbalancedShortcut, MinimizedTree, TreeCertificate, PairWalks };
[[nodiscard]] std::string_view to_string(DecisionMethod m) noexcept;

struct TreeStats {
  std::size_t unique_nodes = 0;
  std::size_t height = 0;
  friend bool operator==(const TreeStats&, const TreeStats&) = default;
};

struct Classification {
  explicit Classification(Rule r) : rule(std::move(r)) {}

  Rule rule;
  ReversibilityClass cls = ReversibilityClass::Reversible;
  ExpressionSet expressions;
  /// Irreversible sizes not covered by any expression.
  std::vector<std::uint64_t> isolated_sizes;
  /// Entry n - 1 for 1 <= n < m, by brute force.
  std::vector<bool> small_n_reversible;
  /// Tree at the point construction stops (see ViolationStop), or the whole
  /// tree. Absent for the shortcut classes.
  std::optional<TreeStats> tree;
  /// Only when the whole tree was built.
  std::optional<TreeStats> full_tree;
  std::vector<NodeId> violating_nodes;
  DecisionMethod method = DecisionMethod::MinimizedTree;
  /// Largest n checked against the pair-graph oracle, and against brute force.
  std::size_t verified_up_to = 0;
  std::size_t brute_force_up_to = 0;
};

struct ClassifyOptions {
  std::size_t verify_up_to = 24;
  /// Brute-force cross-check for sizes with d^n at or below this.
  std::uint64_t brute_force_limit = std::uint64_t{1} << 14;
  std::size_t node_limit = 100'000;
};

/// Throws OracleMismatch when the result disagrees with an oracle.
[[nodiscard]] Classification classify(const Rule& rule, const ClassifyOptions& options = {});

[[nodiscard]] bool is_reversible_for(const Classification& c, std::uint64_t n);
/// Sizes 1..limit for which the CA is reversible.
[[nodiscard]] std::vector<std::uint64_t> reversible_sizes(const Classification& c, std::uint64_t limit);

/// The irreversible sizes n >= start, normalized. With start = m this is
/// the part of the expression set that the tree decides on its own.
[[nodiscard]] ExpressionSet expressions_from(const Classification& c, std::uint64_t start);

/// Canonical representative of {rule, reflect, conjugate, both}: the one with
/// the smallest decimal value.
[[nodiscard]] Rule minimal_equivalent(const Rule& rule);
/// The distinct rules among the reflection / conjugation images, ascending.
[[nodiscard]] std::vector<Rule> equivalents(const Rule& rule);

}  // namespace semirev
