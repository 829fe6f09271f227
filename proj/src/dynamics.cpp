#include "semirev/dynamics.hpp"

#include <sstream>

namespace semirev {

namespace {

std::uint64_t config_count(int states, std::size_t n, std::uint64_t limit) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (total > limit / static_cast<std::uint64_t>(states)) {
      throw LimitExceeded("d^n = " + std::to_string(states) + "^" + std::to_string(n) +
                          " exceeds the brute-force limit of " + std::to_string(limit));
    }
    total *= static_cast<std::uint64_t>(states);
  }
  return total;
}

// Rolling image computation over a decoded configuration.
void successor_cells(const std::vector<State>& x, const Rule& rule, std::vector<State>& y) {
  const std::size_t n = x.size();
  const auto& p = rule.params();
  const auto d = static_cast<Rmt>(p.states);
  for (std::size_t i = 0; i < n; ++i) {
    Rmt r = 0;
    // i - l_r mod n without going negative
    std::size_t pos = (i + n * static_cast<std::size_t>(p.left_radius) - static_cast<std::size_t>(p.left_radius)) % n;
    for (int j = 0; j < p.neighborhood; ++j) {
      r = r * d + x[pos];
      pos = pos + 1 == n ? 0 : pos + 1;
    }
    y[i] = rule[r];
  }
}

}  // namespace

std::uint64_t Configuration::code(int states) const {
  std::uint64_t v = 0;
  for (State s : cells) v = v * static_cast<std::uint64_t>(states) + s;
  return v;
}

Configuration Configuration::from_code(std::uint64_t code, std::size_t n, int states) {
  Configuration c;
  c.cells.assign(n, 0);
  for (std::size_t i = n; i-- > 0;) {
    c.cells[i] = static_cast<State>(code % static_cast<std::uint64_t>(states));
    code /= static_cast<std::uint64_t>(states);
  }
  return c;
}

Configuration Configuration::from_string(std::string_view digits, int states) {
  Configuration c;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    const int v = digit_value(digits[i]);
    if (v < 0 || v >= states) {
      throw ParseError("invalid cell state at position " + std::to_string(i));
    }
    c.cells.push_back(static_cast<State>(v));
  }
  return c;
}

std::string Configuration::to_string() const {
  std::string s;
  for (State c : cells) s.push_back(digit_char(c));
  return s;
}

RmtSequence rmt_sequence(const Configuration& config, const Rule& rule) {
  const std::size_t n = config.size();
  const auto& p = rule.params();
  RmtSequence out(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rmt r = 0;
    for (int j = -p.left_radius; j <= p.right_radius; ++j) {
      const auto idx = static_cast<std::size_t>(
          ((static_cast<long long>(i) + j) % static_cast<long long>(n) + static_cast<long long>(n)) %
          static_cast<long long>(n));
      const State s = config.cells[idx];
      if (s >= p.states) throw std::out_of_range("cell state out of range");
      r = r * static_cast<Rmt>(p.states) + s;
    }
    out[i] = r;
  }
  return out;
}

Configuration step(const Configuration& config, const Rule& rule) {
  Configuration next;
  next.cells.reserve(config.size());
  for (Rmt r : rmt_sequence(config, rule)) next.cells.push_back(rule[r]);
  return next;
}

Configuration shift(const Configuration& config, std::size_t offset) {
  Configuration out;
  const std::size_t n = config.size();
  out.cells.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.cells[i] = config.cells[(i + offset) % n];
  return out;
}

std::vector<std::uint64_t> successor_table(const Rule& rule, std::size_t n, std::uint64_t limit) {
  if (n == 0) throw std::invalid_argument("lattice size must be at least 1");
  const int d = rule.states();
  const std::uint64_t total = config_count(d, n, limit);
  std::vector<std::uint64_t> succ(total);
  std::vector<State> x(n, 0), y(n, 0);
  for (std::uint64_t code = 0; code < total; ++code) {
    successor_cells(x, rule, y);
    std::uint64_t v = 0;
    for (State s : y) v = v * static_cast<std::uint64_t>(d) + s;
    succ[code] = v;
    // odometer increment, cell n-1 least significant
    for (std::size_t i = n; i-- > 0;) {
      if (++x[i] < d) break;
      x[i] = 0;
    }
  }
  return succ;
}

std::vector<Configuration> predecessors(const Configuration& config, const Rule& rule,
                                        std::uint64_t limit) {
  const auto succ = successor_table(rule, config.size(), limit);
  const std::uint64_t target = config.code(rule.states());
  std::vector<Configuration> out;
  for (std::uint64_t code = 0; code < succ.size(); ++code) {
    if (succ[code] == target) out.push_back(Configuration::from_code(code, config.size(), rule.states()));
  }
  return out;
}

bool brute_force_reversible(const Rule& rule, std::size_t n, std::uint64_t limit) {
  if (n == 0) throw std::invalid_argument("lattice size must be at least 1");
  const int d = rule.states();
  const std::uint64_t total = config_count(d, n, limit);
  std::vector<std::uint64_t> seen((total + 63) / 64, 0);
  std::vector<State> x(n, 0), y(n, 0);
  for (std::uint64_t code = 0; code < total; ++code) {
    successor_cells(x, rule, y);
    std::uint64_t v = 0;
    for (State s : y) v = v * static_cast<std::uint64_t>(d) + s;
    const std::uint64_t bit = std::uint64_t{1} << (v & 63);
    if (seen[v >> 6] & bit) return false;
    seen[v >> 6] |= bit;
    for (std::size_t i = n; i-- > 0;) {
      if (++x[i] < d) break;
      x[i] = 0;
    }
  }
  return true;
}

std::vector<std::size_t> TransitionDiagram::in_degrees() const {
  std::vector<std::size_t> deg(edges.size(), 0);
  for (const auto& e : edges) ++deg[e.to];
  return deg;
}

std::vector<std::uint64_t> TransitionDiagram::non_reachable() const {
  std::vector<std::uint64_t> out;
  const auto deg = in_degrees();
  for (std::uint64_t c = 0; c < deg.size(); ++c) {
    if (deg[c] == 0) out.push_back(c);
  }
  return out;
}

std::vector<std::uint64_t> TransitionDiagram::multi_predecessor() const {
  std::vector<std::uint64_t> out;
  const auto deg = in_degrees();
  for (std::uint64_t c = 0; c < deg.size(); ++c) {
    if (deg[c] > 1) out.push_back(c);
  }
  return out;
}

TransitionDiagram transition_diagram(const Rule& rule, std::size_t n, std::uint64_t limit) {
  TransitionDiagram diagram;
  diagram.cells = n;
  diagram.states = rule.states();
  const auto succ = successor_table(rule, n, limit);
  diagram.edges.reserve(succ.size());
  for (std::uint64_t code = 0; code < succ.size(); ++code) diagram.edges.push_back({code, succ[code]});
  return diagram;
}

std::string export_transition_dot(const TransitionDiagram& diagram) {
  std::ostringstream out;
  out << "digraph transitions {\n";
  out << "  // d=" << diagram.states << " n=" << diagram.cells << "\n";
  for (const auto& e : diagram.edges) out << "  " << e.from << ";\n";
  for (const auto& e : diagram.edges) out << "  " << e.from << " -> " << e.to << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace semirev
