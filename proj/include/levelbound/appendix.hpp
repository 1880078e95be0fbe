#pragma once

#include "levelbound/numeric.hpp"
#include "levelbound/problem.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace levelbound {

struct AppendixProducts {
  Real C;
  int n = 0;
  /// prod_{i=2}^{n} 1 / (1 + C / ((i-1) n^(n-i)))
  Real product1;
  /// (1 - C/(n-1))^(n-1); only defined for n > C + 1
  std::optional<Real> floor1;
  /// prod_{i=1}^{n} 1 / (1 + C / i!)
  Real product2;
  /// exp(-C (e - 1))
  Real floor2;

  bool pass1() const { return !floor1 || product1 >= *floor1; }
  bool pass2() const { return product2 >= floor2; }
};

/// Throws ArgumentError unless C > 0 and n >= 2.
AppendixProducts appendix_products(const Real& C, int n);

/// Closed-form lower coefficients c(K, l) of one benchmark, l = 1..K-1.
struct CoefficientFloorReport {
  FunctionKind function = FunctionKind::onemax;
  int n = 0;
  std::size_t K = 0;
  std::vector<Real> lower;  // index l; entry 0 unused
  Real min_lower;
  std::size_t argmin = 0;
  Real max_lower;
  /// onemax only: single-factor upper coefficients and min_l lower/upper
  std::optional<std::vector<Real>> upper;
  std::optional<Real> min_lower_upper_ratio;
};

CoefficientFloorReport coefficient_floor_check(FunctionKind function, int n);

}  // namespace levelbound
