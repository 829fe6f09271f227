#include "semirev/debruijn.hpp"

#include <cmath>
#include <regex>
#include <sstream>
#include <unordered_map>

#include <boost/container_hash/hash.hpp>

namespace semirev {

namespace {

enum class Width { U64, U128, Big };

// Entries of M^k are bounded by d^(2k).
Width width_for(int states, std::size_t n) {
  const double bits = 2.0 * static_cast<double>(n) * std::log2(static_cast<double>(states));
  if (bits < 63.0) return Width::U64;
  if (bits < 127.0) return Width::U128;
  return Width::Big;
}

BigInt to_big(std::uint64_t v) { return BigInt(v); }
BigInt to_big(UInt128 v) {
  BigInt hi(static_cast<std::uint64_t>(v >> 64));
  return (hi << 64) | BigInt(static_cast<std::uint64_t>(v));
}
BigInt to_big(const BigInt& v) { return v; }

template <typename Scalar>
BigInt trace_of_power(const Rule& rule, std::size_t n) {
  const auto m = pair_matrix<Scalar>(rule);
  const auto p = matrix_power(m, n);
  Scalar t = p.trace();
  return to_big(t);
}

template <typename Scalar>
std::vector<BigInt> trace_sequence(const Rule& rule, std::size_t max_n) {
  const auto m = pair_matrix<Scalar>(rule);
  DenseMatrix<Scalar> p = m;
  std::vector<BigInt> out;
  out.reserve(max_n);
  for (std::size_t n = 1; n <= max_n; ++n) {
    if (n > 1) p = multiply(p, m);
    out.push_back(to_big(static_cast<Scalar>(p.trace())));
  }
  return out;
}

BigInt power_of(int base, std::size_t exp) {
  BigInt v = 1;
  for (std::size_t i = 0; i < exp; ++i) v *= base;
  return v;
}

}  // namespace

std::vector<std::size_t> DeBruijnGraph::out_degrees() const {
  std::vector<std::size_t> deg(node_count, 0);
  for (const auto& e : edges) ++deg[e.from];
  return deg;
}

std::vector<std::size_t> DeBruijnGraph::in_degrees() const {
  std::vector<std::size_t> deg(node_count, 0);
  for (const auto& e : edges) ++deg[e.to];
  return deg;
}

bool DeBruijnGraph::is_cycle(const std::vector<Rmt>& sequence) const {
  if (sequence.empty()) return false;
  for (std::size_t i = 0; i < sequence.size(); ++i) {
    const auto& a = edges.at(sequence[i]);
    const auto& b = edges.at(sequence[(i + 1) % sequence.size()]);
    if (a.to != b.from) return false;
  }
  return true;
}

std::uint64_t DeBruijnGraph::count_cycles(std::size_t n) const {
  // walks[v] = number of walks of the current length from `start` ending at v
  std::uint64_t total = 0;
  for (std::size_t start = 0; start < node_count; ++start) {
    std::vector<std::uint64_t> walks(node_count, 0);
    walks[start] = 1;
    for (std::size_t len = 0; len < n; ++len) {
      std::vector<std::uint64_t> next(node_count, 0);
      for (const auto& e : edges) next[e.to] += walks[e.from];
      walks.swap(next);
    }
    total += walks[start];
  }
  return total;
}

DeBruijnGraph build_graph(const Rule& rule) {
  DeBruijnGraph g;
  g.params = rule.params();
  g.node_count = rule.params().word_count();
  const auto d = static_cast<Rmt>(rule.states());
  const auto words = static_cast<Rmt>(g.node_count);
  g.edges.reserve(rule.rmt_count());
  for (Rmt r = 0; r < rule.rmt_count(); ++r) {
    g.edges.push_back({r / d, r % words, r, rule[r]});
  }
  return g;
}

std::string export_debruijn_dot(const DeBruijnGraph& graph) {
  const auto& p = graph.params;
  auto word = [&](std::size_t w) {
    std::string s(static_cast<std::size_t>(p.neighborhood - 1), '0');
    for (std::size_t i = s.size(); i-- > 0;) {
      s[i] = digit_char(static_cast<int>(w % static_cast<std::size_t>(p.states)));
      w /= static_cast<std::size_t>(p.states);
    }
    return s;
  };
  std::ostringstream out;
  out << "digraph debruijn {\n";
  for (std::size_t v = 0; v < graph.node_count; ++v) {
    out << "  " << v << " [label=\"" << word(v) << "\"];\n";
  }
  for (const auto& e : graph.edges) {
    out << "  " << e.from << " -> " << e.to << " [label=\"" << e.rmt << "/"
        << static_cast<int>(e.output) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::vector<DeBruijnEdge> parse_debruijn_dot(const std::string& dot) {
  static const std::regex edge_re(R"re((\d+)\s*->\s*(\d+)\s*\[label="(\d+)/(\d+)"\])re");
  std::vector<DeBruijnEdge> edges;
  for (std::sregex_iterator it(dot.begin(), dot.end(), edge_re), end; it != end; ++it) {
    const auto& m = *it;
    edges.push_back({std::stoull(m[1]), std::stoull(m[2]), static_cast<Rmt>(std::stoul(m[3])),
                     static_cast<State>(std::stoi(m[4]))});
  }
  return edges;
}

BigInt pair_trace(const Rule& rule, std::size_t n) {
  if (n == 0) throw std::invalid_argument("lattice size must be at least 1");
  switch (width_for(rule.states(), n)) {
    case Width::U64:
      return trace_of_power<std::uint64_t>(rule, n);
    case Width::U128:
      return trace_of_power<UInt128>(rule, n);
    case Width::Big:
      break;
  }
  return trace_of_power<BigInt>(rule, n);
}

std::vector<BigInt> pair_trace_sequence(const Rule& rule, std::size_t max_n) {
  switch (width_for(rule.states(), max_n)) {
    case Width::U64:
      return trace_sequence<std::uint64_t>(rule, max_n);
    case Width::U128:
      return trace_sequence<UInt128>(rule, max_n);
    case Width::Big:
      break;
  }
  return trace_sequence<BigInt>(rule, max_n);
}

bool pair_trace_oracle(const Rule& rule, std::size_t n) {
  return pair_trace(rule, n) == power_of(rule.states(), n);
}

std::vector<bool> pair_trace_verdicts(const Rule& rule, std::size_t max_n) {
  const auto traces = pair_trace_sequence(rule, max_n);
  std::vector<bool> out;
  out.reserve(max_n);
  BigInt expected = 1;
  for (std::size_t n = 1; n <= max_n; ++n) {
    expected *= rule.states();
    out.push_back(traces[n - 1] == expected);
  }
  return out;
}

bool PeriodicSizeSet::contains(std::size_t n) const {
  if (n == 0 || prefix.empty()) return false;
  std::size_t i = n - 1;
  if (i >= prefix.size()) i = prefix.size() - period + (i - (prefix.size() - period)) % period;
  return prefix[i];
}

PeriodicSizeSet irreversible_sizes_by_walks(const Rule& rule, std::size_t max_bits) {
  const std::size_t words = rule.params().word_count();
  const std::size_t size = words * words;
  const std::size_t stride = (size + 63) / 64;
  const auto d = static_cast<std::size_t>(rule.states());
  using Bits = std::vector<std::uint64_t>;
  Bits adj(size * stride, 0);
  // target[b] holds a when some edge a -> b pairs two different RMTs
  Bits target(size * stride, 0);
  const auto rmts = static_cast<Rmt>(rule.rmt_count());
  for (Rmt r = 0; r < rmts; ++r) {
    for (Rmt s = 0; s < rmts; ++s) {
      if (rule[r] != rule[s]) continue;
      const std::size_t a = (r / d) * words + (s / d);
      const std::size_t b = (r % words) * words + (s % words);
      adj[a * stride + b / 64] |= std::uint64_t{1} << (b % 64);
      if (r != s) target[b * stride + a / 64] |= std::uint64_t{1} << (a % 64);
    }
  }

  struct BitsHash {
    std::size_t operator()(const Bits& b) const noexcept { return boost::hash_range(b.begin(), b.end()); }
  };
  std::unordered_map<Bits, std::size_t, BitsHash> seen;
  PeriodicSizeSet out;
  Bits power(size * stride, 0);  // A^0
  for (std::size_t i = 0; i < size; ++i) power[i * stride + i / 64] |= std::uint64_t{1} << (i % 64);
  for (std::size_t k = 0;; ++k) {
    auto [it, inserted] = seen.try_emplace(power, k);
    if (!inserted) {
      out.period = k - it->second;
      return out;
    }
    if ((k + 1) * size * stride * 64 > max_bits) throw LimitExceeded("pair-graph walk powers do not settle");
    // size n = k + 1 is irreversible iff A^k and target overlap
    bool hit = false;
    for (std::size_t i = 0; i < power.size() && !hit; ++i) hit = (power[i] & target[i]) != 0;
    out.prefix.push_back(hit);
    Bits next(size * stride, 0);
    for (std::size_t i = 0; i < size; ++i) {
      for (std::size_t j = 0; j < size; ++j) {
        if (!((power[i * stride + j / 64] >> (j % 64)) & 1U)) continue;
        for (std::size_t w = 0; w < stride; ++w) next[i * stride + w] |= adj[j * stride + w];
      }
    }
    power = std::move(next);
  }
}

}  // namespace semirev

