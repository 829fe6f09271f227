#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "semirev/classifier.hpp"

namespace semirev {

using Json = nlohmann::ordered_json;

/// {rule, d, m, decimal, class, expressions, small_n_reversible, tree,
/// verified_up_to} followed by the evidence fields. `decimal` is a number
/// when it fits in 64 bits and a string otherwise.
[[nodiscard]] Json classification_json(const Classification& c);

/// "n=2j+2", "n=2j+4, n=3j+3", "n≥4", "∅", or "∀n" for the strict class.
[[nodiscard]] std::string expression_summary(const Classification& c);

/// Header and one row per classification, columns d, m, rule, M, height,
/// class, expression.
[[nodiscard]] std::string classification_table(const std::vector<Classification>& rows);

[[nodiscard]] Json mismatch_json(const Rule& rule, const OracleMismatch& e);
[[nodiscard]] std::string mismatch_text(const Rule& rule, const OracleMismatch& e);

using ClassHistogram = std::map<ReversibilityClass, std::size_t>;
[[nodiscard]] ClassHistogram histogram(const std::vector<Classification>& rows);

}  // namespace semirev
