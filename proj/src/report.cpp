#include "semirev/report.hpp"

#include <iomanip>
#include <sstream>

namespace semirev {

namespace {

Json decimal_json(const Rule& rule) {
  const BigInt v = wolfram_decimal(rule);
  if (v <= std::numeric_limits<std::uint64_t>::max()) return Json(v.convert_to<std::uint64_t>());
  return Json(v.str());
}

Json stats_json(const std::optional<TreeStats>& s) {
  if (!s) return Json();
  return Json{{"unique_nodes", s->unique_nodes}, {"height", s->height}};
}

std::string verdict_row(const std::vector<bool>& v) {
  std::string out;
  for (bool b : v) {
    out += b ? 'R' : '.';
  }
  return out;
}

}  // namespace

Json classification_json(const Classification& c) {
  Json j;
  j["rule"] = format_rule(c.rule);
  j["d"] = c.rule.states();
  j["m"] = c.rule.neighborhood();
  j["decimal"] = decimal_json(c.rule);
  j["class"] = std::string(to_string(c.cls));
  auto exprs = Json::array();
  for (const auto& e : c.expressions) {
    exprs.push_back({{"residue", e.residue}, {"modulus", e.modulus}, {"min_n", e.min_n}});
  }
  j["expressions"] = std::move(exprs);
  j["small_n_reversible"] = c.small_n_reversible;
  j["tree"] = stats_json(c.tree);
  j["verified_up_to"] = c.verified_up_to;
  j["isolated_sizes"] = c.isolated_sizes;
  j["expression_text"] = expression_summary(c);
  auto from_m = Json::array();
  for (const auto& e : expressions_from(c, static_cast<std::uint64_t>(c.rule.neighborhood()))) {
    from_m.push_back({{"residue", e.residue}, {"modulus", e.modulus}, {"min_n", e.min_n}});
  }
  j["expressions_from_m"] = std::move(from_m);
  j["full_tree"] = stats_json(c.full_tree);
  j["violating_nodes"] = c.violating_nodes;
  j["method"] = std::string(to_string(c.method));
  j["brute_force_up_to"] = c.brute_force_up_to;
  j["left_radius"] = c.rule.params().left_radius;
  return j;
}

std::string expression_summary(const Classification& c) {
  if (c.cls == ReversibilityClass::StrictlyIrreversible) return "∀n";
  std::string out;
  for (const auto& e : c.expressions) {
    if (!out.empty()) out += ", ";
    out += e.short_form();
  }
  for (auto n : c.isolated_sizes) {
    if (!out.empty()) out += ", ";
    out += "n=" + std::to_string(n);
  }
  return out.empty() ? "∅" : out;
}

std::string classification_table(const std::vector<Classification>& rows) {
  std::ostringstream out;
  std::size_t width = 4;
  for (const auto& c : rows) width = std::max(width, c.rule.rmt_count());
  out << std::left << std::setw(3) << "d" << std::setw(3) << "m" << std::setw(static_cast<int>(width + 2)) << "rule"
      << std::setw(8) << "M" << std::setw(8) << "height" << std::setw(28) << "class" << "expression\n";
  for (const auto& c : rows) {
    out << std::setw(3) << c.rule.states() << std::setw(3) << c.rule.neighborhood()
        << std::setw(static_cast<int>(width + 2)) << format_rule(c.rule);
    if (c.tree) {
      out << std::setw(8) << c.tree->unique_nodes << std::setw(8) << c.tree->height;
    } else {
      out << std::setw(8) << "NA" << std::setw(8) << "NA";
    }
    out << std::setw(28) << to_string(c.cls) << expression_summary(c) << "\n";
  }
  return out.str();
}

Json mismatch_json(const Rule& rule, const OracleMismatch& e) {
  return Json{{"rule", format_rule(rule)},
              {"d", rule.states()},
              {"m", rule.neighborhood()},
              {"error", "oracle-mismatch"},
              {"method", e.method()},
              {"n", e.size()},
              {"classifier", e.classifier_verdicts()},
              {"oracle", e.oracle_verdicts()}};
}

std::string mismatch_text(const Rule& rule, const OracleMismatch& e) {
  std::ostringstream out;
  out << "oracle mismatch for rule " << format_rule(rule) << ": " << e.what() << "\n"
      << "n from 1, R = reversible\n"
      << "classifier " << verdict_row(e.classifier_verdicts()) << "\n"
      << "oracle     " << verdict_row(e.oracle_verdicts()) << "\n";
  return out.str();
}

ClassHistogram histogram(const std::vector<Classification>& rows) {
  ClassHistogram h;
  for (auto cls : {ReversibilityClass::Reversible, ReversibilityClass::StrictlyIrreversible,
                   ReversibilityClass::TriviallySemiReversible, ReversibilityClass::NonTriviallySemiReversible}) {
    h[cls] = 0;
  }
  for (const auto& c : rows) ++h[c.cls];
  return h;
}

}  // namespace semirev
