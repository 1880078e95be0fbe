#include "levelbound/appendix.hpp"

#include "levelbound/coefficients.hpp"
#include "levelbound/errors.hpp"
#include "levelbound/provider.hpp"

namespace levelbound {

AppendixProducts appendix_products(const Real& C, int n) {
  if (!(C > 0)) throw ArgumentError("C must be positive");
  if (n < 2) throw ArgumentError("n must be at least 2");
  AppendixProducts out;
  out.C = C;
  out.n = n;

  // i runs downward so n^(n-i) grows by one factor of n per step
  Real p1 = 1;
  Real npow = 1;
  for (int i = n; i >= 2; --i) {
    p1 /= 1 + C / (Real(i - 1) * npow);
    npow *= n;
  }
  out.product1 = p1;
  if (Real(n) > C + 1) out.floor1 = pow(Real(1) - C / (n - 1), n - 1);

  Real p2 = 1;
  Real fact = 1;
  for (int i = 1; i <= n; ++i) {
    fact *= i;
    p2 /= 1 + C / fact;
  }
  out.product2 = p2;
  out.floor2 = exp(-C * (exp(Real(1)) - 1));
  return out;
}

CoefficientFloorReport coefficient_floor_check(FunctionKind function, int n) {
  const PaperAnalyticProvider<Real> provider(function, n);
  const auto lower = coeff_ratio<Real>(provider, Direction::lower, MethodId::paper_analytic);
  CoefficientFloorReport out;
  out.function = function;
  out.n = n;
  out.K = provider.K();
  out.lower.assign(out.K, Real(0));
  out.min_lower = 1;
  out.max_lower = 0;
  for (std::size_t l = 1; l < out.K; ++l) {
    out.lower[l] = lower.values[out.K][l];
    if (l == 1 || out.lower[l] < out.min_lower) {
      out.min_lower = out.lower[l];
      out.argmin = l;
    }
    if (out.lower[l] > out.max_lower) out.max_lower = out.lower[l];
  }
  if (provider.supports(Direction::upper)) {
    const auto upper = coeff_ratio<Real>(provider, Direction::upper, MethodId::paper_analytic);
    std::vector<Real> u(out.K, Real(0));
    Real ratio = 1;
    bool first = true;
    for (std::size_t l = 1; l < out.K; ++l) {
      u[l] = upper.values[out.K][l];
      if (u[l] == 0) continue;
      Real r = out.lower[l] / u[l];
      if (first || r < ratio) ratio = r;
      first = false;
    }
    out.upper = std::move(u);
    out.min_lower_upper_ratio = ratio;
  }
  return out;
}

}  // namespace levelbound
