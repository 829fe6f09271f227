#include "semirev/classifier.hpp"

#include <algorithm>
#include <array>

#include "semirev/debruijn.hpp"
#include "semirev/dynamics.hpp"
#include "semirev/rtree.hpp"
#include "semirev/tree_node.hpp"

namespace semirev {

namespace {

constexpr std::array<std::string_view, 4> kClassNames = {
    "Reversible", "StrictlyIrreversible", "TriviallySemiReversible", "NonTriviallySemiReversible"};

std::string verdict_message(const std::string& method, std::size_t n, bool classifier) {
  return "classifier says " + std::string(classifier ? "reversible" : "irreversible") + " for n=" +
         std::to_string(n) + ", " + method + " disagrees";
}

// Per node: fails the intermediate conditions, and fails the level n - iota
// conditions for iota = 1..m-1.
struct NodeVerdict {
  bool intermediate_ok = true;
  std::vector<bool> special_ok;
};

std::vector<NodeVerdict> node_verdicts(const MinimizedTree& tree, const NodeAlgebra& algebra) {
  const int m = algebra.params().neighborhood;
  std::vector<NodeVerdict> out(tree.nodes.size());
  for (NodeId id = 0; id < tree.nodes.size(); ++id) {
    const auto& g = tree.nodes[id].gamma;
    out[id].intermediate_ok = algebra.satisfies_intermediate(g);
    out[id].special_ok.assign(static_cast<std::size_t>(m), true);
    for (int iota = 1; iota < m; ++iota) {
      out[id].special_ok[static_cast<std::size_t>(iota)] =
          algebra.satisfies_special(algebra.restrict_special(g, iota), iota);
    }
  }
  return out;
}

TreeStats stop_stats(const ViolationStop& stop) { return {stop.unique_nodes, stop.level}; }

// Irreversible sizes from pair-graph reachability, as progressions plus
// isolated points added to `points`.
ExpressionSet walk_expressions(const Rule& rule, std::set<std::uint64_t>& points) {
  const auto sizes = irreversible_sizes_by_walks(rule);
  const std::size_t periodic_from = sizes.prefix.size() - sizes.period + 1;
  ExpressionSet out;
  for (std::size_t n = 1; n <= sizes.prefix.size(); ++n) {
    if (!sizes.prefix[n - 1]) continue;
    if (n < periodic_from) points.insert(n);
    else out.push_back(IrreversibilityExpression::progression(n, sizes.period));
  }
  return out;
}

}  // namespace

std::string_view to_string(DecisionMethod m) noexcept {
  switch (m) {
    case DecisionMethod::StrictShortcut:
      return "strict-shortcut";
    case DecisionMethod::UnbalancedShortcut:
      return "unbalanced-shortcut";
    case DecisionMethod::MinimizedTree:
      return "minimized-tree";
    case DecisionMethod::TreeCertificate:
      return "tree-certificate";
    case DecisionMethod::PairWalks:
      return "pair-walks";
  }
  return "";
}

std::string_view to_string(ReversibilityClass c) noexcept { return kClassNames[static_cast<std::size_t>(c)]; }

std::optional<ReversibilityClass> parse_class(std::string_view text) {
  for (std::size_t i = 0; i < kClassNames.size(); ++i) {
    if (text == kClassNames[i]) return static_cast<ReversibilityClass>(i);
  }
  if (text == "reversible") return ReversibilityClass::Reversible;
  if (text == "strict") return ReversibilityClass::StrictlyIrreversible;
  if (text == "trivial") return ReversibilityClass::TriviallySemiReversible;
  if (text == "nontrivial") return ReversibilityClass::NonTriviallySemiReversible;
  return std::nullopt;
}

OracleMismatch::OracleMismatch(std::string method, std::size_t n, std::vector<bool> classifier,
                               std::vector<bool> oracle)
    : std::runtime_error(verdict_message(method, n, classifier.at(n - 1))),
      method_(std::move(method)),
      n_(n),
      classifier_(std::move(classifier)),
      oracle_(std::move(oracle)) {}

ScanResult scan_violations(const MinimizedTree& tree, const Rule& rule) {
  if (!tree.finished) throw std::invalid_argument("scan needs a finished minimized tree");
  const NodeAlgebra algebra(rule);
  const auto verdicts = node_verdicts(tree, algebra);
  const std::uint64_t m = static_cast<std::uint64_t>(rule.neighborhood());
  const auto& pop = tree.population;
  ScanResult result;
  std::vector<bool> flagged(tree.nodes.size(), false);

  for (std::size_t p = 0; p < pop.horizon(); ++p) {
    const bool periodic = p >= pop.preperiod();
    for (NodeId id : pop.nodes_at(p)) {
      const auto& v = verdicts[id];
      if (!v.intermediate_ok) {
        result.expressions.push_back(IrreversibilityExpression::final_segment(p + m));
        flagged[id] = true;
      }
      for (std::uint64_t iota = 1; iota < m; ++iota) {
        if (v.special_ok[iota]) continue;
        flagged[id] = true;
        std::uint64_t n = p + iota;
        if (!periodic) {
          if (n >= m) result.isolated.insert(n);
          continue;
        }
        const std::uint64_t step = pop.period();
        if (n < m) n += (m - n + step - 1) / step * step;
        result.expressions.push_back(IrreversibilityExpression::progression(n, step));
      }
    }
  }
  result.expressions = simplify(result.expressions, result.isolated);
  for (NodeId id = 0; id < flagged.size(); ++id) {
    if (flagged[id]) result.violating_nodes.push_back(id);
  }
  return result;
}

bool reversible_for_n_by_minimized(const MinimizedTree& tree, const Rule& rule, std::size_t n) {
  const auto m = static_cast<std::size_t>(rule.neighborhood());
  if (n < m) throw std::invalid_argument("tree decision requires n >= m");
  if (!tree.finished) throw std::invalid_argument("decision needs a finished minimized tree");
  const NodeAlgebra algebra(rule);
  for (std::size_t p = 0; p + m <= n; ++p) {
    for (NodeId id : tree.population.nodes_at(p)) {
      if (!algebra.satisfies_intermediate(tree.nodes[id].gamma)) return false;
    }
  }
  for (std::size_t iota = 1; iota < m; ++iota) {
    const int i = static_cast<int>(iota);
    for (NodeId id : tree.population.nodes_at(n - iota)) {
      if (!algebra.satisfies_special(algebra.restrict_special(tree.nodes[id].gamma, i), i)) return false;
    }
  }
  return true;
}

Classification classify(const Rule& rule, const ClassifyOptions& options) {
  Classification c(rule);
  const auto m = static_cast<std::uint64_t>(rule.neighborhood());

  if (is_strictly_irreversible(rule)) {
    c.cls = ReversibilityClass::StrictlyIrreversible;
    c.expressions = {IrreversibilityExpression::final_segment(1)};
    c.method = DecisionMethod::StrictShortcut;
    c.small_n_reversible.assign(m - 1, false);
  } else {
    std::set<std::uint64_t> points;
    for (std::uint64_t n = 1; n < m; ++n) {
      const bool rev = brute_force_reversible(rule, n);
      c.small_n_reversible.push_back(rev);
      if (!rev) points.insert(n);
    }
    ExpressionSet found;
    if (!is_balanced_rule(rule)) {
      found.push_back(IrreversibilityExpression::final_segment(m));
      c.method = DecisionMethod::UnbalancedShortcut;
    } else {
      MinimizedTreeOptions topt;
      topt.node_limit = options.node_limit;
      topt.stop_at_first_violation = true;
      std::optional<MinimizedTree> tree;
      try {
        tree = build_minimized(rule, topt);
      } catch (const LimitExceeded&) {
      }
      if (tree && tree->first_violation) {
        // Irreversible from some size on; the sizes in between are decided one by one.
        const auto& stop = *tree->first_violation;
        c.tree = stop_stats(stop);
        c.violating_nodes = {stop.node};
        found.push_back(IrreversibilityExpression::final_segment(stop.irreversible_from));
        for (std::uint64_t n = m; n < stop.irreversible_from; ++n) {
          if (!reversible_for_n_by_tree(rule, n)) points.insert(n);
        }
        c.method = DecisionMethod::TreeCertificate;
      } else if (tree) {
        auto scan = scan_violations(*tree, rule);
        found = std::move(scan.expressions);
        points.insert(scan.isolated.begin(), scan.isolated.end());
        c.violating_nodes = std::move(scan.violating_nodes);
        c.tree = c.full_tree = TreeStats{tree->unique_nodes(), tree->height};
        c.method = DecisionMethod::MinimizedTree;
      } else {
        found = walk_expressions(rule, points);
        c.method = DecisionMethod::PairWalks;
      }
    }
    c.expressions = simplify(found, points);
    c.isolated_sizes.assign(points.begin(), points.end());
    if (c.expressions.empty() && c.isolated_sizes.empty()) {
      c.cls = ReversibilityClass::Reversible;
    } else if (std::any_of(c.expressions.begin(), c.expressions.end(),
                           [](const IrreversibilityExpression& e) { return e.is_final_segment(); })) {
      c.cls = ReversibilityClass::TriviallySemiReversible;
    } else {
      c.cls = ReversibilityClass::NonTriviallySemiReversible;
    }
  }

  if (options.verify_up_to > 0) {
    const std::size_t top = options.verify_up_to;
    std::vector<bool> ours(top);
    for (std::size_t n = 1; n <= top; ++n) ours[n - 1] = is_reversible_for(c, n);
    const auto theirs = pair_trace_verdicts(rule, top);
    for (std::size_t n = 1; n <= top; ++n) {
      if (ours[n - 1] != theirs[n - 1]) throw OracleMismatch("pair-graph oracle", n, ours, theirs);
    }
    c.verified_up_to = top;
    std::vector<bool> brute;
    std::uint64_t configs = 1;
    for (std::size_t n = 1; n <= top; ++n) {
      configs *= static_cast<std::uint64_t>(rule.states());
      if (configs > options.brute_force_limit) break;
      brute.push_back(brute_force_reversible(rule, n, options.brute_force_limit));
      if (brute.back() != ours[n - 1]) {
        ours.resize(brute.size());
        throw OracleMismatch("brute force", n, ours, brute);
      }
      c.brute_force_up_to = n;
    }
  }
  return c;
}

bool is_reversible_for(const Classification& c, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("sizes start at 1");
  if (n < static_cast<std::uint64_t>(c.rule.neighborhood()) && n - 1 < c.small_n_reversible.size()) {
    return c.small_n_reversible[n - 1];
  }
  if (std::binary_search(c.isolated_sizes.begin(), c.isolated_sizes.end(), n)) return false;
  return std::none_of(c.expressions.begin(), c.expressions.end(),
                      [n](const IrreversibilityExpression& e) { return e.contains(n); });
}

std::vector<std::uint64_t> reversible_sizes(const Classification& c, std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 1; n <= limit; ++n) {
    if (is_reversible_for(c, n)) out.push_back(n);
  }
  return out;
}

ExpressionSet expressions_from(const Classification& c, std::uint64_t start) {
  ExpressionSet out;
  for (auto e : c.expressions) {
    if (e.min_n < start) e = IrreversibilityExpression::progression(
        e.min_n + (start - e.min_n + e.modulus - 1) / e.modulus * e.modulus, e.modulus);
    out.push_back(e);
  }
  return normalize(std::move(out));
}

std::vector<Rule> equivalents(const Rule& rule) {
  std::vector<Rule> all{rule, reflect(rule), conjugate(rule), conjugate(reflect(rule))};
  std::sort(all.begin(), all.end(), [](const Rule& a, const Rule& b) { return wolfram_decimal(a) < wolfram_decimal(b); });
  std::vector<Rule> out;
  for (auto& r : all) {
    const bool dup = std::any_of(out.begin(), out.end(),
                                 [&](const Rule& o) { return std::ranges::equal(o.table(), r.table()); });
    if (!dup) out.push_back(std::move(r));
  }
  return out;
}

Rule minimal_equivalent(const Rule& rule) { return equivalents(rule).front(); }

}  // namespace semirev
