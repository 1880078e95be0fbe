#include "levelbound/bounds.hpp"

#include "levelbound/errors.hpp"

#include <string>

namespace levelbound {

template <class T>
BoundSeries<T> assemble_bound(const ProbabilityProvider<T>& provider,
                              const CoefficientTable<T>& coeffs, Direction direction) {
  if (coeffs.n != provider.n() || coeffs.K != provider.K()) {
    throw ArgumentError("coefficient table and probabilities come from different partitions");
  }
  if (coeffs.direction != direction) {
    throw ArgumentError(std::string("coefficients for the ") +
                        std::string(to_string(coeffs.direction)) +
                        " direction cannot assemble a " + std::string(to_string(direction)) +
                        " bound");
  }
  if (!provider.supports(direction)) {
    throw ArgumentError("probabilities do not support this direction");
  }
  const std::size_t K = provider.K();
  std::vector<T> inv_escape(K + 1, T(0));
  for (std::size_t l = 1; l <= K; ++l) {
    const T e = direction == Direction::lower ? provider.escape_max(l) : provider.escape_min(l);
    if (e == 0) {
      throw UnreachableLevelError("level " + std::to_string(l) + " cannot reach higher levels");
    }
    inv_escape[l] = T(1) / e;
  }
  BoundSeries<T> out;
  out.method = coeffs.method;
  out.direction = direction;
  out.d.assign(K + 1, T(0));
  for (std::size_t k = 1; k <= K; ++k) {
    T sum = inv_escape[k];
    for (std::size_t l = 1; l < k; ++l) {
      if (coeffs.values[k][l] != 0) sum += coeffs.values[k][l] * inv_escape[l];
    }
    out.d[k] = std::move(sum);
  }
  return out;
}

template <class T>
BoundSeries<T> assemble_bound(const LevelKernel<T>& kernel, const CoefficientTable<T>& coeffs,
                              Direction direction) {
  return assemble_bound<T>(KernelProvider<T>(kernel), coeffs, direction);
}

template <class T>
const BoundSeries<T>* BoundReport<T>::find(MethodId method, Direction direction) const {
  for (const auto& s : series) {
    if (s.method == method && s.direction == direction) return &s;
  }
  return nullptr;
}

template <class T>
std::vector<std::string> BoundReport<T>::sandwich_violations(double rel_slack) const {
  std::vector<std::string> out;
  if (!oracle) return out;
  for (const auto& s : series) {
    for (std::size_t k = 1; k < s.d.size() && k < oracle->m.size(); ++k) {
      if (!oracle->reachable[k]) continue;
      const T& m = oracle->m[k];
      const bool ok = s.direction == Direction::lower ? le_with_slack(s.d[k], m, rel_slack)
                                                      : le_with_slack(m, s.d[k], rel_slack);
      if (!ok) {
        out.push_back(std::string(to_string(s.method)) + " " + std::string(to_string(s.direction)) +
                      " at k=" + std::to_string(k) + ": d=" + to_decimal(s.d[k], 20) +
                      " m=" + to_decimal(m, 20));
      }
    }
  }
  return out;
}

template <class T>
BoundReport<T> compute_bounds(const LevelKernel<T>& kernel, const std::vector<MethodId>& methods,
                              const std::optional<StartDistribution<T>>& start) {
  BoundReport<T> report;
  report.K = kernel.K();
  for (MethodId m : methods) {
    if (m == MethodId::paper_analytic) continue;
    const CoefficientTable<T> c = compute_coefficients(kernel, m, start);
    report.series.push_back(assemble_bound(kernel, c, c.direction));
  }
  if (kernel.exact()) report.oracle = exact_level_hitting(kernel);
  return report;
}

#define LEVELBOUND_INSTANTIATE(T)                                                              \
  template BoundSeries<T> assemble_bound<T>(const ProbabilityProvider<T>&,                     \
                                            const CoefficientTable<T>&, Direction);            \
  template BoundSeries<T> assemble_bound<T>(const LevelKernel<T>&, const CoefficientTable<T>&, \
                                            Direction);                                        \
  template struct BoundReport<T>;                                                              \
  template BoundReport<T> compute_bounds<T>(const LevelKernel<T>&, const std::vector<MethodId>&, \
                                            const std::optional<StartDistribution<T>>&);

LEVELBOUND_INSTANTIATE(Real)
LEVELBOUND_INSTANTIATE(Rational)

}  // namespace levelbound
