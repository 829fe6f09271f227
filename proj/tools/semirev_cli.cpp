// semirev: reversibility classes of finite 1-D cellular automata.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "semirev/classifier.hpp"
#include "semirev/debruijn.hpp"
#include "semirev/dynamics.hpp"
#include "semirev/mintree.hpp"
#include "semirev/report.hpp"

namespace {

using namespace semirev;

constexpr int kUsageError = 1;
constexpr int kMismatch = 2;

constexpr std::uint64_t kFamilyBudget = 256;
constexpr std::uint64_t kLongFamilyBudget = 65536;

struct RuleArgs {
  int states = 2;
  int neighborhood = 3;
  std::string rule;
  std::optional<int> left_radius;
  std::string format = "json";
};

void add_shape(CLI::App* cmd, RuleArgs& a, bool with_rule) {
  cmd->add_option("--states,-d", a.states, "Number of cell states d")->check(CLI::Range(2, 36));
  cmd->add_option("--neighborhood,-m", a.neighborhood, "Neighbourhood size m")->check(CLI::Range(1, 24));
  if (with_rule) cmd->add_option("--rule,-r", a.rule, "Digit string R[d^m-1]..R[0] or decimal")->required();
  cmd->add_option("--left-radius", a.left_radius, "Cells to the left of the centre");
  cmd->add_option("--format", a.format, "Output format")->check(CLI::IsMember({"json", "text"}));
}

RuleParams shape_of(const RuleArgs& a) { return RuleParams::make(a.states, a.neighborhood, a.left_radius); }

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

int report_mismatch(const RuleArgs& a, const Rule& rule, const OracleMismatch& e) {
  if (a.format == "json") print_json(mismatch_json(rule, e));
  else std::cout << mismatch_text(rule, e);
  return kMismatch;
}

int cmd_classify(const RuleArgs& a, const Rule& rule, const ClassifyOptions& opt) {
  try {
    const Classification c = classify(rule, opt);
    if (a.format == "json") print_json(classification_json(c));
    else std::cout << classification_table({c});
    return 0;
  } catch (const OracleMismatch& e) {
    return report_mismatch(a, rule, e);
  }
}

int cmd_check(const RuleArgs& a, const Rule& rule, std::size_t n, const ClassifyOptions& opt) {
  Classification c(rule);
  try {
    c = classify(rule, opt);
  } catch (const OracleMismatch& e) {
    return report_mismatch(a, rule, e);
  }
  const bool ours = is_reversible_for(c, n);
  const bool pair = pair_trace_oracle(rule, n);
  std::optional<bool> brute;
  std::uint64_t configs = 1;
  bool fits = true;
  for (std::size_t i = 0; i < n && fits; ++i) {
    configs *= static_cast<std::uint64_t>(rule.states());
    fits = configs <= opt.brute_force_limit;
  }
  if (fits) brute = brute_force_reversible(rule, n, opt.brute_force_limit);
  const bool agree = ours == pair && (!brute || *brute == ours);
  auto word = [](bool r) { return r ? "reversible" : "irreversible"; };
  if (a.format == "json") {
    Json j{{"rule", format_rule(rule)}, {"n", n}, {"classifier", word(ours)}, {"pair_graph", word(pair)}};
    j["brute_force"] = brute ? Json(word(*brute)) : Json();
    j["agree"] = agree;
    print_json(j);
  } else {
    std::cout << "n=" << n << ": " << word(ours) << "\n"
              << "pair-graph oracle: " << word(pair) << "\n";
    if (brute) std::cout << "brute force: " << word(*brute) << "\n";
  }
  return agree ? 0 : kMismatch;
}

int cmd_oracle(const RuleArgs& a, const Rule& rule, std::size_t n, const std::string& method,
               std::uint64_t limit) {
  const bool rev = method == "bruteforce" ? brute_force_reversible(rule, n, limit) : pair_trace_oracle(rule, n);
  const char* word = rev ? "reversible" : "irreversible";
  if (a.format == "json") {
    print_json(Json{{"rule", format_rule(rule)}, {"n", n}, {"method", method}, {"verdict", word}});
  } else {
    std::cout << word << "\n";
  }
  return 0;
}

struct FamilyArgs {
  std::string cls;
  bool long_run = false;
  bool group = false;
};

int cmd_enumerate(const RuleArgs& a, const FamilyArgs& f, const ClassifyOptions& opt) {
  const RuleParams params = shape_of(a);
  BigInt total = 1;
  for (std::size_t i = 0; i < params.rmt_count(); ++i) total *= params.states;
  const std::uint64_t budget = f.long_run ? kLongFamilyBudget : kFamilyBudget;
  if (total > budget) {
    std::cerr << "family has " << total << " rules, above the budget of " << budget
              << (f.long_run ? "" : "; pass --long for up to 65536") << "\n";
    return kUsageError;
  }
  std::optional<ReversibilityClass> filter;
  bool semi_only = false;
  if (!f.cls.empty()) {
    if (f.cls == "semi" || f.cls == "SemiReversible") semi_only = true;
    else filter = parse_class(f.cls);
    if (!filter && !semi_only) {
      std::cerr << "unknown class " << f.cls << "\n";
      return kUsageError;
    }
  }

  std::vector<Classification> all;
  const auto count = total.convert_to<std::uint64_t>();
  for (std::uint64_t i = 0; i < count; ++i) {
    const Rule rule = rule_from_index(BigInt(i), params);
    try {
      all.push_back(classify(rule, opt));
    } catch (const OracleMismatch& e) {
      return report_mismatch(a, rule, e);
    }
  }
  const ClassHistogram hist = histogram(all);

  std::vector<Classification> rows;
  std::vector<std::vector<Rule>> groups;
  for (const auto& c : all) {
    if (filter && c.cls != *filter) continue;
    if (semi_only && !is_semi_reversible(c.cls)) continue;
    if (f.group) {
      auto eq = equivalents(c.rule);
      if (!(eq.front() == c.rule)) continue;
      groups.push_back(std::move(eq));
    }
    rows.push_back(c);
  }

  const std::size_t semi =
      hist.at(ReversibilityClass::TriviallySemiReversible) + hist.at(ReversibilityClass::NonTriviallySemiReversible);
  if (a.format == "json") {
    Json j;
    j["d"] = params.states;
    j["m"] = params.neighborhood;
    j["rules"] = count;
    Json h;
    for (const auto& [cls, n] : hist) h[std::string(to_string(cls))] = n;
    h["SemiReversible"] = semi;
    j["histogram"] = std::move(h);
    auto list = Json::array();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      Json row = classification_json(rows[i]);
      if (f.group) {
        auto eq = Json::array();
        for (const auto& r : groups[i]) eq.push_back(format_rule(r));
        row["equivalents"] = std::move(eq);
      }
      list.push_back(std::move(row));
    }
    j["classifications"] = std::move(list);
    print_json(j);
  } else {
    std::cout << classification_table(rows) << "\n";
    for (const auto& [cls, n] : hist) std::cout << to_string(cls) << ": " << n << "\n";
    std::cout << "SemiReversible: " << semi << "\n";
  }
  return 0;
}

int cmd_export(const RuleArgs& a, const Rule& rule, const std::string& target, std::optional<std::size_t> n,
               const std::string& output, std::size_t node_limit) {
  std::string text;
  if (target == "debruijn") {
    text = export_debruijn_dot(build_graph(rule));
  } else if (target == "transition-diagram") {
    if (!n) {
      std::cerr << "--n is required for the transition diagram\n";
      return kUsageError;
    }
    text = export_transition_dot(transition_diagram(rule, *n));
  } else {
    MinimizedTreeOptions opt;
    opt.node_limit = node_limit;
    const MinimizedTree tree = build_minimized(rule, opt);
    text = a.format == "json" ? minimized_tree_json(tree) + "\n" : export_minimized_dot(tree);
  }
  if (output.empty() || output == "-") {
    std::cout << text;
  } else {
    std::ofstream out(output);
    if (!out) {
      std::cerr << "cannot write " << output << "\n";
      return kUsageError;
    }
    out << text;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reversibility classes of finite one-dimensional cellular automata"};
  app.require_subcommand(1);

  RuleArgs args;
  ClassifyOptions opt;
  std::size_t n = 0;
  std::string method = "pairgraph";
  FamilyArgs family;
  std::string target;
  std::optional<std::size_t> export_n;
  std::string output;
  std::uint64_t brute_limit = kBruteForceLimit;

  auto add_verify = [&](CLI::App* cmd) {
    cmd->add_option("--verify-up-to", opt.verify_up_to, "Cross-check sizes 1..N against the oracles");
    cmd->add_option("--node-limit", opt.node_limit, "Unique-node cap for the minimized tree");
  };

  auto* classify_cmd = app.add_subcommand("classify", "Reversibility class and irreversibility expressions");
  add_shape(classify_cmd, args, true);
  add_verify(classify_cmd);

  auto* check_cmd = app.add_subcommand("check", "Classifier and oracle verdicts for one size");
  add_shape(check_cmd, args, true);
  add_verify(check_cmd);
  check_cmd->add_option("--n", n, "Lattice size")->required()->check(CLI::PositiveNumber);

  auto* oracle_cmd = app.add_subcommand("oracle", "Decide one size with an oracle only");
  add_shape(oracle_cmd, args, true);
  oracle_cmd->add_option("--n", n, "Lattice size")->required()->check(CLI::PositiveNumber);
  oracle_cmd->add_option("--method", method, "Oracle")->check(CLI::IsMember({"bruteforce", "pairgraph"}));
  oracle_cmd->add_option("--brute-force-limit", brute_limit, "Cap on d^n");

  auto* enum_cmd = app.add_subcommand("enumerate", "Classify every rule of a family");
  add_shape(enum_cmd, args, false);
  add_verify(enum_cmd);
  enum_cmd->add_option("--class", family.cls,
                       "Only list this class: reversible, strict, trivial, nontrivial, semi, or a class name");
  enum_cmd->add_flag("--long", family.long_run, "Allow families of up to 65536 rules");
  enum_cmd->add_flag("--group-equivalents", family.group, "List one rule per reflection/conjugation class");

  auto* export_cmd = app.add_subcommand("export", "Write a diagram as DOT");
  add_shape(export_cmd, args, true);
  export_cmd->add_option("--target", target, "Diagram")
      ->required()
      ->check(CLI::IsMember({"debruijn", "transition-diagram", "minimized-tree"}));
  export_cmd->add_option("--n", export_n, "Lattice size (transition diagram)")->check(CLI::PositiveNumber);
  export_cmd->add_option("--output,-o", output, "File to write, default stdout");
  export_cmd->add_option("--node-limit", opt.node_limit, "Unique-node cap for the minimized tree");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }
  if (export_cmd->parsed() && export_cmd->count("--format") == 0) args.format = "text";

  try {
    if (enum_cmd->parsed()) {
      if (!enum_cmd->count("--verify-up-to")) opt.verify_up_to = 16;
      return cmd_enumerate(args, family, opt);
    }
    const Rule rule = parse_rule(args.rule, shape_of(args));
    if (classify_cmd->parsed()) return cmd_classify(args, rule, opt);
    if (check_cmd->parsed()) return cmd_check(args, rule, n, opt);
    if (oracle_cmd->parsed()) return cmd_oracle(args, rule, n, method, brute_limit);
    return cmd_export(args, rule, target, export_n, output, opt.node_limit);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const LimitExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  }
}
