#pragma once

#include "levelbound/kernel.hpp"
#include "levelbound/partition.hpp"
#include "levelbound/problem.hpp"

#include <doctest.h>

#include <bit>
#include <cstdint>
#include <vector>

namespace testing {

using namespace levelbound;

inline Rational q(long long a, long long b) { return Rational(a) / Rational(b); }

inline bool close(const Real& a, const Real& b, double rel) { return relative_gap(a, b) <= rel; }

/// (function, n) pairs used by the property tests.
inline std::vector<ProblemSpec> specs(const std::vector<int>& ns) {
  std::vector<ProblemSpec> out;
  for (FunctionKind f : {FunctionKind::onemax, FunctionKind::fullydeceptive, FunctionKind::twomax1,
                         FunctionKind::deceptive}) {
    for (int n : ns) {
      const bool needs_even = f == FunctionKind::twomax1 || f == FunctionKind::deceptive;
      if (needs_even && n % 2 != 0) continue;
      out.push_back(ProblemSpec::make(f, n));
    }
  }
  return out;
}

inline std::string label(const ProblemSpec& s) {
  return std::string(to_string(s.function)) + " n=" + std::to_string(s.n);
}

/// Accepted-move counts from one bit string, bucketed by target level and
/// flip distance: counts[level][d]. Mask probability is
/// (n-1)^(n-d) / n^n, so these integers determine the row exactly.
inline std::vector<std::vector<long long>> mask_counts(const ProblemSpec& spec,
                                                      const LevelPartition& part,
                                                      std::uint32_t x) {
  const int n = spec.n;
  std::vector<std::vector<long long>> counts(part.K() + 1, std::vector<long long>(n + 1, 0));
  const Rational fx = spec.fitness(std::popcount(x));
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const std::uint32_t y = x ^ mask;
    const int wy = std::popcount(y);
    std::size_t target = part.level_of_weight(std::popcount(x));
    if (spec.fitness(wy) >= fx) target = part.level_of_weight(wy);
    ++counts[target][std::popcount(mask)];
  }
  return counts;
}

inline Rational row_probability(int n, const std::vector<long long>& by_distance) {
  Rational sum = 0;
  const Rational nn = power(Rational(n), static_cast<unsigned>(n));
  for (int d = 0; d <= n; ++d) {
    if (by_distance[d] == 0) continue;
    sum += Rational(by_distance[d]) * power(Rational(n - 1), static_cast<unsigned>(n - d)) / nn;
  }
  return sum;
}

}  // namespace testing
