#pragma once

#include "levelbound/kernel.hpp"
#include "levelbound/method.hpp"
#include "levelbound/provider.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace levelbound {

/// Coefficients c(k, l) for 1 <= l < k <= K. values[k] has k entries
/// (index 0 unused and kept at 0); c(k, k) = 1 by convention.
template <class T>
struct CoefficientTable {
  MethodId method = MethodId::type0;
  Direction direction = Direction::lower;
  int n = 0;
  std::size_t K = 0;
  TriangularTable<T> values;
  std::optional<T> scalar;                  // viscosity
  std::optional<std::vector<T>> per_level;  // visit probability, index 0..K
  std::vector<std::string> notes;           // clamping events and similar

  T at(std::size_t k, std::size_t l) const {
    if (k == l) return T(1);
    return values[k][l];
  }
  /// Smallest off-diagonal entry; 1 when there is none.
  T min_value() const;
};

/// Level distribution of the initial state, index 0..K.
template <class T>
using StartDistribution = std::vector<T>;

template <class T>
StartDistribution<T> deterministic_start(std::size_t K, std::size_t level);

/// Throws ArgumentError unless the vector has K+1 nonnegative entries summing
/// to 1 (exactly for Rational, within 1e-20 for Real).
template <class T>
void validate_start(const StartDistribution<T>& start, std::size_t K);

/// which == 0: type0 (lower); which == 1: type1 (upper).
template <class T>
CoefficientTable<T> coeff_constant(const LevelKernel<T>& kernel, int which);

template <class T>
CoefficientTable<T> coeff_viscosity(const LevelKernel<T>& kernel);

template <class T>
CoefficientTable<T> coeff_visit_probability(const LevelKernel<T>& kernel,
                                            const StartDistribution<T>& start);

/// Equality in the coefficient recursion, with r_min (lower) or r_max (upper).
template <class T>
CoefficientTable<T> coeff_recursive(const LevelKernel<T>& kernel, Direction direction);

/// Product of r_min(i, [l, i-1]) for i = l+1..k.
template <class T>
CoefficientTable<T> coeff_digraph_product(const LevelKernel<T>& kernel);

/// Lower: product over i = l+1..k of 1 / (1 + skip_max(i,l) / reach_min(i,l)).
/// Upper: 1 / (1 + skip_min(k,l) / reach_max(k,l)).
/// `tag` lets the paper-analytic provider report under its own method id.
template <class T>
CoefficientTable<T> coeff_ratio(const ProbabilityProvider<T>& provider, Direction direction,
                                std::optional<MethodId> tag = std::nullopt);

/// r_max(k, [l, k-1]).
template <class T>
CoefficientTable<T> coeff_conditional_upper(const LevelKernel<T>& kernel);

/// Dispatch on a kernel-driven method id. paper_analytic is rejected here;
/// use coeff_ratio with a PaperAnalyticProvider.
template <class T>
CoefficientTable<T> compute_coefficients(const LevelKernel<T>& kernel, MethodId method,
                                         const std::optional<StartDistribution<T>>& start = {});

}  // namespace levelbound
