#pragma once

#include "levelbound/coefficients.hpp"
#include "levelbound/oracle.hpp"
#include "levelbound/provider.hpp"

#include <optional>
#include <string>
#include <vector>

namespace levelbound {

/// d_k for k = 0..K under one coefficient table; d[0] = 0.
template <class T>
struct BoundSeries {
  MethodId method = MethodId::type0;
  Direction direction = Direction::lower;
  std::vector<T> d;
};

/// d_k = 1/p(k,[0,k-1]) + sum_{l<k} c(k,l) / p(l,[0,l-1]); lower bounds use
/// the p_max escapes, upper bounds the p_min ones. Throws ArgumentError
/// when the table and the probabilities disagree on n or K, or when the
/// table was built for the other direction.
template <class T>
BoundSeries<T> assemble_bound(const ProbabilityProvider<T>& provider,
                              const CoefficientTable<T>& coeffs, Direction direction);

template <class T>
BoundSeries<T> assemble_bound(const LevelKernel<T>& kernel, const CoefficientTable<T>& coeffs,
                              Direction direction);

template <class T>
struct BoundReport {
  std::size_t K = 0;
  std::vector<BoundSeries<T>> series;
  std::optional<OracleResult<T>> oracle;

  const BoundSeries<T>* find(MethodId method, Direction direction) const;
  /// Levels where a lower entry exceeds the oracle or an upper entry falls
  /// below it, beyond `rel_slack`. Empty when there is no oracle.
  std::vector<std::string> sandwich_violations(double rel_slack) const;
};

/// Assembles every requested kernel-driven method (paper_analytic is
/// skipped; it lives in a different labeling) and attaches the level-chain
/// oracle when the kernel is exact.
template <class T>
BoundReport<T> compute_bounds(const LevelKernel<T>& kernel, const std::vector<MethodId>& methods,
                              const std::optional<StartDistribution<T>>& start = {});

}  // namespace levelbound
