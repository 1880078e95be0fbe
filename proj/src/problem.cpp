#include "levelbound/problem.hpp"

#include "levelbound/errors.hpp"

#include <string>

namespace levelbound {

std::string_view to_string(FunctionKind kind) {
  switch (kind) {
    case FunctionKind::onemax: return "onemax";
    case FunctionKind::fullydeceptive: return "fullydeceptive";
    case FunctionKind::twomax1: return "twomax1";
    case FunctionKind::deceptive: return "deceptive";
    case FunctionKind::custom: return "custom";
  }
  return "unknown";
}

std::optional<FunctionKind> parse_function(std::string_view name) {
  for (FunctionKind k : {FunctionKind::onemax, FunctionKind::fullydeceptive, FunctionKind::twomax1,
                         FunctionKind::deceptive, FunctionKind::custom}) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

ProblemSpec ProblemSpec::make(FunctionKind kind, int n) {
  ProblemSpec spec;
  spec.function = kind;
  spec.n = n;
  spec.validate();
  return spec;
}

ProblemSpec ProblemSpec::make_custom(std::vector<Rational> weight_fitness) {
  ProblemSpec spec;
  spec.function = FunctionKind::custom;
  spec.n = static_cast<int>(weight_fitness.size()) - 1;
  spec.weight_fitness = std::move(weight_fitness);
  spec.validate();
  return spec;
}

void ProblemSpec::validate() const {
  if (n < 2) throw ArgumentError("n must be at least 2, got " + std::to_string(n));
  if (n > 4096) throw ArgumentError("n above 4096 is not supported");
  if ((function == FunctionKind::twomax1 || function == FunctionKind::deceptive) && n % 2 != 0) {
    throw ArgumentError(std::string(to_string(function)) + " requires an even n, got " +
                        std::to_string(n));
  }
  if (function == FunctionKind::custom) {
    if (weight_fitness.size() != static_cast<std::size_t>(n) + 1) {
      throw ArgumentError("custom fitness map must cover every weight 0..n");
    }
  } else if (!weight_fitness.empty()) {
    throw ArgumentError("weight_fitness is only meaningful for custom functions");
  }
}

Rational ProblemSpec::fitness(int w) const {
  if (w < 0 || w > n) throw ArgumentError("weight out of range: " + std::to_string(w));
  const int half = n / 2;
  switch (function) {
    case FunctionKind::onemax:
      return w;
    case FunctionKind::fullydeceptive:
      return w == 0 ? n + 1 : w;
    case FunctionKind::twomax1:
      if (w == 0 || w == n) return n;
      return w >= half ? w : half - w;
    case FunctionKind::deceptive:
      return w <= half ? n - 2 * w : w - n - 1;
    case FunctionKind::custom:
      return weight_fitness[static_cast<std::size_t>(w)];
  }
  return 0;
}

Rational ProblemSpec::max_fitness() const {
  Rational best = fitness(0);
  for (int w = 1; w <= n; ++w) {
    Rational f = fitness(w);
    if (f > best) best = f;
  }
  return best;
}

}  // namespace levelbound
