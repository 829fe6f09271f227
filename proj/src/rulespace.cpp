#include "semirev/rulespace.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace semirev {

namespace {

std::size_t checked_pow(std::size_t base, int exp, std::size_t limit) {
  std::size_t v = 1;
  for (int i = 0; i < exp; ++i) {
    if (v > limit / base) return limit + 1;
    v *= base;
  }
  return v;
}

}  // namespace

char digit_char(int value) {
  if (value < 10) return static_cast<char>('0' + value);
  return static_cast<char>('a' + value - 10);
}

int digit_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  const char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (lower >= 'a' && lower <= 'z') return lower - 'a' + 10;
  return -1;
}

RuleParams RuleParams::make(int states, int neighborhood, std::optional<int> left_radius,
                            std::size_t rmt_limit) {
  if (states < 2) throw std::invalid_argument("state count must be at least 2");
  if (neighborhood < 2) throw std::invalid_argument("neighborhood size must be at least 2");
  const int left = left_radius.value_or((neighborhood - 1) / 2);
  if (left < 0 || left > neighborhood - 1) {
    throw std::invalid_argument("left radius must lie in [0, m-1]");
  }
  const std::size_t rmts = checked_pow(static_cast<std::size_t>(states), neighborhood, rmt_limit);
  if (rmts > rmt_limit) {
    throw LimitExceeded("d^m exceeds the configured limit of " + std::to_string(rmt_limit));
  }
  RuleParams p;
  p.states = states;
  p.neighborhood = neighborhood;
  p.left_radius = left;
  p.right_radius = neighborhood - 1 - left;
  return p;
}

std::size_t RuleParams::rmt_count() const {
  return checked_pow(static_cast<std::size_t>(states), neighborhood, SIZE_MAX / 2);
}

std::size_t RuleParams::word_count() const {
  return checked_pow(static_cast<std::size_t>(states), neighborhood - 1, SIZE_MAX / 2);
}

Rule::Rule(RuleParams params, std::vector<State> table)
    : params_(params), table_(std::move(table)) {
  if (table_.size() != params_.rmt_count()) {
    throw std::invalid_argument("rule table must have d^m entries");
  }
  for (State s : table_) {
    if (s >= params_.states) throw std::invalid_argument("rule table entry out of range");
  }
}

Rule Rule::with_left_radius(int left_radius) const {
  return Rule(RuleParams::make(params_.states, params_.neighborhood, left_radius,
                               std::max(kDefaultRmtLimit, table_.size())),
              table_);
}

Rule parse_rule(std::string_view text, const RuleParams& params) {
  const std::size_t n = params.rmt_count();
  const int d = params.states;
  if (text.empty()) throw ParseError("empty rule string");

  const bool all_decimal =
      std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; });
  const bool digit_form = text.size() == n || (text.size() > 1 && text.front() == '0') ||
                          !all_decimal;

  if (digit_form) {
    if (text.size() != n) {
      std::ostringstream msg;
      msg << "rule digit string has length " << text.size() << ", expected d^m = " << n;
      if (text.size() > n) msg << " (first extra character at position " << n << ")";
      throw ParseError(msg.str());
    }
    std::vector<State> table(n);
    for (std::size_t pos = 0; pos < n; ++pos) {
      const int v = digit_value(text[pos]);
      if (v < 0 || v >= d) {
        std::ostringstream msg;
        msg << "invalid digit '" << text[pos] << "' at position " << pos << " for d = " << d;
        throw ParseError(msg.str());
      }
      table[n - 1 - pos] = static_cast<State>(v);
    }
    return Rule(params, std::move(table));
  }

  const BigInt value{std::string(text)};
  BigInt bound = 1;
  for (std::size_t i = 0; i < n; ++i) bound *= d;
  if (value >= bound) {
    std::ostringstream msg;
    msg << "decimal rule " << text << " out of range: must be below d^(d^m) = " << bound;
    throw ParseError(msg.str());
  }
  return rule_from_index(value, params);
}

Rule rule_from_index(const BigInt& index, const RuleParams& params) {
  const std::size_t n = params.rmt_count();
  std::vector<State> table(n);
  BigInt v = index;
  for (std::size_t r = 0; r < n; ++r) {
    table[r] = static_cast<State>(static_cast<unsigned>(v % params.states));
    v /= params.states;
  }
  if (v != 0) throw ParseError("rule index out of range");
  return Rule(params, std::move(table));
}

std::string format_rule(const Rule& rule) {
  std::string out;
  out.reserve(rule.rmt_count());
  for (std::size_t i = rule.rmt_count(); i-- > 0;) out.push_back(digit_char(rule[static_cast<Rmt>(i)]));
  return out;
}

BigInt wolfram_decimal(const Rule& rule) {
  BigInt v = 0;
  for (std::size_t i = rule.rmt_count(); i-- > 0;) {
    v *= rule.states();
    v += rule[static_cast<Rmt>(i)];
  }
  return v;
}

Rmt rmt_of_tuple(std::span<const State> tuple, const RuleParams& params) {
  if (tuple.size() != static_cast<std::size_t>(params.neighborhood)) {
    throw std::invalid_argument("tuple length must equal the neighborhood size");
  }
  Rmt r = 0;
  for (State s : tuple) {
    if (s >= params.states) throw std::out_of_range("tuple state out of range");
    r = r * static_cast<Rmt>(params.states) + s;
  }
  return r;
}

std::vector<State> tuple_of_rmt(Rmt r, const RuleParams& params) {
  if (r >= params.rmt_count()) throw std::out_of_range("RMT out of range");
  std::vector<State> tuple(static_cast<std::size_t>(params.neighborhood));
  for (std::size_t i = tuple.size(); i-- > 0;) {
    tuple[i] = static_cast<State>(r % static_cast<Rmt>(params.states));
    r /= static_cast<Rmt>(params.states);
  }
  return tuple;
}

bool is_balanced_rule(const Rule& rule) {
  std::vector<std::size_t> histogram(static_cast<std::size_t>(rule.states()), 0);
  for (State s : rule.table()) ++histogram[s];
  const std::size_t expected = rule.params().word_count();
  return std::all_of(histogram.begin(), histogram.end(),
                     [expected](std::size_t c) { return c == expected; });
}

std::vector<Rmt> sibling_set(const RuleParams& params, std::size_t j) {
  if (j >= params.word_count()) throw std::out_of_range("sibling set index out of range");
  std::vector<Rmt> out;
  for (int b = 0; b < params.states; ++b) {
    out.push_back(static_cast<Rmt>(j * static_cast<std::size_t>(params.states) + b));
  }
  return out;
}

std::vector<Rmt> equivalent_set(const RuleParams& params, std::size_t i) {
  if (i >= params.word_count()) throw std::out_of_range("equivalent set index out of range");
  std::vector<Rmt> out;
  for (int a = 0; a < params.states; ++a) {
    out.push_back(static_cast<Rmt>(static_cast<std::size_t>(a) * params.word_count() + i));
  }
  return out;
}

std::vector<Rmt> uniform_rmts(const RuleParams& params) {
  // (d^m - 1) / (d - 1) = 11...1 in base d
  const std::size_t unit = (params.rmt_count() - 1) / static_cast<std::size_t>(params.states - 1);
  std::vector<Rmt> out;
  for (int x = 0; x < params.states; ++x) out.push_back(static_cast<Rmt>(unit * x));
  return out;
}

bool is_strictly_irreversible(const Rule& rule) {
  std::vector<bool> seen(static_cast<std::size_t>(rule.states()), false);
  for (Rmt r : uniform_rmts(rule.params())) {
    if (seen[rule[r]]) return true;
    seen[rule[r]] = true;
  }
  return false;
}

Rule reflect(const Rule& rule) {
  const RuleParams& p = rule.params();
  std::vector<State> table(rule.rmt_count());
  for (Rmt r = 0; r < table.size(); ++r) {
    auto t = tuple_of_rmt(r, p);
    std::reverse(t.begin(), t.end());
    table[r] = rule[rmt_of_tuple(t, p)];
  }
  RuleParams q = p;
  std::swap(q.left_radius, q.right_radius);
  return Rule(q, std::move(table));
}

Rule conjugate(const Rule& rule) {
  const RuleParams& p = rule.params();
  const auto top = static_cast<State>(p.states - 1);
  std::vector<State> table(rule.rmt_count());
  for (Rmt r = 0; r < table.size(); ++r) {
    auto t = tuple_of_rmt(r, p);
    for (State& s : t) s = static_cast<State>(top - s);
    table[r] = static_cast<State>(top - rule[rmt_of_tuple(t, p)]);
  }
  return Rule(p, std::move(table));
}

}  // namespace semirev
