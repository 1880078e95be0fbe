#pragma once

#include "levelbound/numeric.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace levelbound {

enum class FunctionKind { onemax, fullydeceptive, twomax1, deceptive, custom };

std::string_view to_string(FunctionKind kind);
std::optional<FunctionKind> parse_function(std::string_view name);

/// Benchmark function on {0,1}^n together with its bit-string length. All
/// supported functions depend on the Hamming weight only, so fitness is a
/// map from weight to value. The mutation rate is always 1/n.
struct ProblemSpec {
  FunctionKind function = FunctionKind::onemax;
  int n = 2;
  /// Only for FunctionKind::custom: fitness for weights 0..n.
  std::vector<Rational> weight_fitness;

  static ProblemSpec make(FunctionKind kind, int n);
  static ProblemSpec make_custom(std::vector<Rational> weight_fitness);

  /// Throws ArgumentError when the invariants do not hold.
  void validate() const;

  Rational fitness(int weight) const;
  Rational max_fitness() const;
};

}  // namespace levelbound
