#pragma once

#include <cstdint>
#include <vector>

#include "zonocalc/check_result.hpp"
#include "zonocalc/scalar.hpp"

namespace zonocalc {

/// Set function on a ground set [m], m <= 16, as a dense table indexed by
/// subset bitmask (2^m entries, uniform mode).
class SetFunction {
 public:
  SetFunction(int ground_size, std::vector<Scalar> table);

  int ground_size() const { return m_; }
  Mode mode() const { return table_[0].mode(); }
  const Scalar& value(std::uint32_t mask) const { return table_[mask]; }

 private:
  int m_;
  std::vector<Scalar> table_;
};

struct SubmodularityReport {
  bool submodular;
  /// Worst pair in the Definition sense: F(s) + F(t) - F(s|t) - F(s&t),
  /// minimized; negative exactly when not submodular.
  Scalar worst_margin = Scalar::real(0.0);
  std::uint32_t worst_s = 0, worst_t = 0;
};

/// Local characterization: F(S+i+j) + F(S) <= F(S+i) + F(S+j) over all S and
/// pairs i < j outside S. Equivalent to the pairwise definition.
SubmodularityReport is_submodular(const SetFunction& f);
/// Exhaustive pairwise check (the literal definition), for cross-validation.
SubmodularityReport is_submodular_pairwise(const SetFunction& f);

/// Multiset of non-empty subsets of [m] (multiplicity allowed).
class MultiHypergraph {
 public:
  MultiHypergraph(int ground_size, std::vector<std::uint32_t> sets);

  int ground_size() const { return m_; }
  const std::vector<std::uint32_t>& sets() const { return sets_; }
  /// Sorted copy, the canonical form for multiset comparison.
  std::vector<std::uint32_t> canonical() const;

 private:
  int m_;
  std::vector<std::uint32_t> sets_;
};

/// Replaces the non-nested pair (sets[i], sets[j]) by intersection and union,
/// keeping only the union when the intersection is empty. Nested pairs are
/// rejected with DegenerateError.
MultiHypergraph elementary_compression(const MultiHypergraph& h, int i, int j);

/// The unique minimal hypergraph dominated by h: S#_j = elements lying in at
/// least j of the sets.
MultiHypergraph minimal_hypergraph(const MultiHypergraph& h);

Scalar hypergraph_sum(const SetFunction& f, const MultiHypergraph& h);

/// Applies the compression steps, asserting sum_{S} F(S) never increases.
/// Margin is the worst per-step decrease (>= 0 == the ordering inequality
/// holds at every step). F must be submodular.
CheckResult compression_sum_check(const SetFunction& f, const MultiHypergraph& h,
                                  const std::vector<std::pair<int, int>>& steps);

}  // namespace zonocalc
