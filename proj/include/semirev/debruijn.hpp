#pragma once

#include <cstdint>
#include <string>
#include <type_traits>
#include <vector>

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>

#include "semirev/rulespace.hpp"

__extension__ typedef unsigned __int128 semirev_uint128;

namespace Eigen {

// Exact 128-bit accumulation for pair-matrix powers that overflow 64 bits.
template <>
struct NumTraits<semirev_uint128> : GenericNumTraits<semirev_uint128> {
  using Real = semirev_uint128;
  using NonInteger = double;
  using Nested = semirev_uint128;
  enum {
    IsInteger = 1,
    IsSigned = 0,
    IsComplex = 0,
    RequireInitialization = 0,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 4
  };
};

}  // namespace Eigen

namespace semirev {

using UInt128 = semirev_uint128;

struct DeBruijnEdge {
  std::size_t from;  // word a x
  std::size_t to;    // word x b
  Rmt rmt;           // a x b
  State output;      // R[a x b]

  friend bool operator==(const DeBruijnEdge&, const DeBruijnEdge&) = default;
  friend auto operator<=>(const DeBruijnEdge&, const DeBruijnEdge&) = default;
};

/// B(m-1, S) with every edge labelled by its RMT and next state.
struct DeBruijnGraph {
  RuleParams params;
  std::size_t node_count = 0;
  std::vector<DeBruijnEdge> edges;  // ascending RMT

  [[nodiscard]] std::vector<std::size_t> out_degrees() const;
  [[nodiscard]] std::vector<std::size_t> in_degrees() const;
  /// Whether `sequence` is a closed walk of the graph.
  [[nodiscard]] bool is_cycle(const std::vector<Rmt>& sequence) const;
  /// Closed walks of length n, counted by enumeration.
  [[nodiscard]] std::uint64_t count_cycles(std::size_t n) const;
};

[[nodiscard]] DeBruijnGraph build_graph(const Rule& rule);

/// Edges labelled "rmt/output", ascending RMT.
[[nodiscard]] std::string export_debruijn_dot(const DeBruijnGraph& graph);
/// Reads back the edges of a DOT file written by export_debruijn_dot.
[[nodiscard]] std::vector<DeBruijnEdge> parse_debruijn_dot(const std::string& dot);

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Transfer matrix of the pair graph on (u, u') word pairs: entry
/// [(u,u'),(v,v')] counts RMT pairs r: u->v, r': u'->v' with R[r] == R[r'].
/// trace(M^n) is the number of configuration pairs (x, y) with G_n(x) = G_n(y).
template <typename Scalar>
[[nodiscard]] DenseMatrix<Scalar> pair_matrix(const Rule& rule) {
  const std::size_t words = rule.params().word_count();
  const std::size_t size = words * words;
  DenseMatrix<Scalar> m = DenseMatrix<Scalar>::Zero(static_cast<Eigen::Index>(size),
                                                    static_cast<Eigen::Index>(size));
  const Rmt rmts = static_cast<Rmt>(rule.rmt_count());
  const auto d = static_cast<std::size_t>(rule.states());
  for (Rmt r = 0; r < rmts; ++r) {
    for (Rmt s = 0; s < rmts; ++s) {
      if (rule[r] != rule[s]) continue;
      const std::size_t row = (r / d) * words + (s / d);
      const std::size_t col = (r % words) * words + (s % words);
      m(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) += Scalar(1);
    }
  }
  return m;
}

/// Matrix product. Big-integer scalars go through a plain triple loop, since
/// Eigen's product kernels do not accept them.
template <typename Scalar>
[[nodiscard]] DenseMatrix<Scalar> multiply(const DenseMatrix<Scalar>& a, const DenseMatrix<Scalar>& b) {
  if constexpr (std::is_arithmetic_v<Scalar> || std::is_same_v<Scalar, UInt128>) {
    return a * b;
  } else {
    DenseMatrix<Scalar> out = DenseMatrix<Scalar>::Zero(a.rows(), b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      for (Eigen::Index k = 0; k < a.cols(); ++k) {
        if (a(i, k) == 0) continue;
        for (Eigen::Index j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
      }
    }
    return out;
  }
}

/// Square-and-multiply power.
template <typename Derived>
[[nodiscard]] auto matrix_power(const Eigen::MatrixBase<Derived>& base, std::uint64_t exponent) {
  using Scalar = typename Derived::Scalar;
  DenseMatrix<Scalar> result = DenseMatrix<Scalar>::Identity(base.rows(), base.cols());
  DenseMatrix<Scalar> sq = base;
  while (exponent > 0) {
    if (exponent & 1) result = multiply(result, sq);
    exponent >>= 1;
    if (exponent > 0) sq = multiply(sq, sq);
  }
  return result;
}

/// trace(M^n), exact.
[[nodiscard]] BigInt pair_trace(const Rule& rule, std::size_t n);

/// trace(M^n) for n = 1..max_n, exact.
[[nodiscard]] std::vector<BigInt> pair_trace_sequence(const Rule& rule, std::size_t max_n);

/// G_n injective iff trace(M^n) == d^n.
[[nodiscard]] bool pair_trace_oracle(const Rule& rule, std::size_t n);

/// Verdicts for n = 1..max_n (index 0 is n = 1).
[[nodiscard]] std::vector<bool> pair_trace_verdicts(const Rule& rule, std::size_t max_n);

/// Sizes n >= 1 as an eventually periodic set: n is a member iff
/// n <= prefix.size() ? prefix[n-1] : prefix[n-1 - period * k] for the k
/// that brings the index into the last `period` entries.
struct PeriodicSizeSet {
  std::vector<bool> prefix;
  std::size_t period = 1;
  [[nodiscard]] bool contains(std::size_t n) const;
};

/// Irreversible sizes, exactly, from reachability in the pair graph: G_n is
/// not injective iff some closed walk of length n uses an edge pairing two
/// different RMTs. Boolean powers of the adjacency matrix are eventually
/// periodic, which bounds the work.
[[nodiscard]] PeriodicSizeSet irreversible_sizes_by_walks(const Rule& rule,
                                                          std::size_t max_bits = std::size_t{1} << 30);

}  // namespace semirev
