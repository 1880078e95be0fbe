#include "levelbound/coefficients.hpp"

#include "levelbound/errors.hpp"

#include <string>

namespace levelbound {

namespace {

template <class T>
CoefficientTable<T> empty_table(MethodId method, Direction direction, int n, std::size_t K) {
  CoefficientTable<T> t;
  t.method = method;
  t.direction = direction;
  t.n = n;
  t.K = K;
  t.values.resize(K + 1);
  for (std::size_t k = 0; k <= K; ++k) t.values[k].assign(k, T(0));
  return t;
}

template <class T>
CoefficientTable<T> empty_table(MethodId method, Direction direction, const LevelKernel<T>& kernel) {
  return empty_table<T>(method, direction, kernel.partition().n, kernel.K());
}

template <class T>
void require_escapes(const LevelKernel<T>& kernel) {
  for (std::size_t k = 1; k <= kernel.K(); ++k) {
    if (kernel.escape_min(k) == 0) {
      throw UnreachableLevelError("level " + std::to_string(k) + " cannot reach higher levels");
    }
  }
}

template <class T>
void store(CoefficientTable<T>& t, std::size_t k, std::size_t l, T v) {
  if (clamp_unit(v)) {
    t.notes.push_back("clamped c(" + std::to_string(k) + "," + std::to_string(l) + ") into [0,1]");
  }
  t.values[k][l] = std::move(v);
}

// r(k, l) for single targets, from the chosen side of the bounds.
template <class T>
TriangularTable<T> single_ratios(const LevelKernel<T>& kernel, Direction direction) {
  const std::size_t K = kernel.K();
  TriangularTable<T> r(K + 1);
  for (std::size_t k = 1; k <= K; ++k) {
    r[k].assign(k, T(0));
    for (std::size_t l = 0; l < k; ++l) {
      T v = direction == Direction::lower ? T(kernel.p_min(k, l) / kernel.escape_max(k))
                                          : T(kernel.p_max(k, l) / kernel.escape_min(k));
      clamp_unit(v);
      r[k][l] = std::move(v);
    }
  }
  return r;
}

}  // namespace

template <class T>
T CoefficientTable<T>::min_value() const {
  T best = 1;
  for (std::size_t k = 2; k < values.size(); ++k) {
    for (std::size_t l = 1; l < k; ++l) {
      if (values[k][l] < best) best = values[k][l];
    }
  }
  return best;
}

template <class T>
StartDistribution<T> deterministic_start(std::size_t K, std::size_t level) {
  if (level > K) throw ArgumentError("start level " + std::to_string(level) + " exceeds K");
  StartDistribution<T> s(K + 1, T(0));
  s[level] = 1;
  return s;
}

template <class T>
void validate_start(const StartDistribution<T>& start, std::size_t K) {
  if (start.size() != K + 1) {
    throw ArgumentError("start distribution needs " + std::to_string(K + 1) + " entries, got " +
                        std::to_string(start.size()));
  }
  T sum = 0;
  for (const T& v : start) {
    if (v < 0) throw ArgumentError("start distribution has a negative entry");
    sum += v;
  }
  if constexpr (is_exact_v<T>) {
    if (sum != 1) throw ArgumentError("start distribution does not sum to 1");
  } else {
    if (abs(sum - 1) > T(1e-20)) throw ArgumentError("start distribution does not sum to 1");
  }
}

template <class T>
CoefficientTable<T> coeff_constant(const LevelKernel<T>& kernel, int which) {
  if (which != 0 && which != 1) throw ArgumentError("constant coefficient must be 0 or 1");
  auto t = empty_table<T>(which == 0 ? MethodId::type0 : MethodId::type1,
                          which == 0 ? Direction::lower : Direction::upper, kernel);
  if (which == 1) {
    for (std::size_t k = 2; k <= t.K; ++k) {
      for (std::size_t l = 1; l < k; ++l) t.values[k][l] = 1;
    }
  }
  return t;
}

template <class T>
CoefficientTable<T> coeff_viscosity(const LevelKernel<T>& kernel) {
  require_escapes(kernel);
  auto t = empty_table<T>(MethodId::viscosity_c, Direction::lower, kernel);
  T c = 1;
  for (std::size_t k = 2; k <= t.K; ++k) {
    for (std::size_t l = 1; l < k; ++l) {
      const T& below = kernel.skip_max(k, l + 1);  // p(k, [0, l])
      if (below == 0) continue;
      T ratio = kernel.p_min(k, l) / below;
      if (ratio < c) c = ratio;
    }
  }
  if (clamp_unit(c)) t.notes.push_back("clamped viscosity into [0,1]");
  for (std::size_t k = 2; k <= t.K; ++k) {
    for (std::size_t l = 1; l < k; ++l) t.values[k][l] = c;
  }
  t.scalar = c;
  return t;
}

template <class T>
CoefficientTable<T> coeff_visit_probability(const LevelKernel<T>& kernel,
                                            const StartDistribution<T>& start) {
  require_escapes(kernel);
  validate_start(start, kernel.K());
  auto t = empty_table<T>(MethodId::visit_cl, Direction::lower, kernel);
  std::vector<T> cl(t.K + 1, T(0));
  cl[t.K] = 1;
  T start_below = start[0];  // Pr(X0 in S_[0, l])
  for (std::size_t l = 1; l < t.K; ++l) {
    start_below += start[l];
    T c = start_below == 0 ? T(0) : T(start[l] / start_below);
    for (std::size_t k = l + 1; k <= t.K; ++k) {
      const T& below = kernel.skip_max(k, l + 1);
      if (below == 0) continue;
      T ratio = kernel.p_min(k, l) / below;
      if (ratio < c) c = ratio;
    }
    if (clamp_unit(c)) t.notes.push_back("clamped c_" + std::to_string(l) + " into [0,1]");
    cl[l] = c;
  }
  for (std::size_t k = 2; k <= t.K; ++k) {
    for (std::size_t l = 1; l < k; ++l) t.values[k][l] = cl[l];
  }
  t.per_level = std::move(cl);
  return t;
}

template <class T>
CoefficientTable<T> coeff_recursive(const LevelKernel<T>& kernel, Direction direction) {
  require_escapes(kernel);
  auto t = empty_table<T>(direction == Direction::lower ? MethodId::recursive_lower
                                                        : MethodId::recursive_upper,
                          direction, kernel);
  const TriangularTable<T> r = single_ratios(kernel, direction);
  for (std::size_t l = 1; l < t.K; ++l) {
    for (std::size_t k = l + 1; k <= t.K; ++k) {
      T c = r[k][l];
      for (std::size_t j = l + 1; j < k; ++j) c += r[k][j] * t.values[j][l];
      store(t, k, l, std::move(c));
    }
  }
  return t;
}

template <class T>
CoefficientTable<T> coeff_digraph_product(const LevelKernel<T>& kernel) {
  require_escapes(kernel);
  auto t = empty_table<T>(MethodId::digraph_product_lower, Direction::lower, kernel);
  for (std::size_t l = 1; l < t.K; ++l) {
    T running = 1;
    for (std::size_t k = l + 1; k <= t.K; ++k) {
      T factor = kernel.reach_min(k, l) / kernel.escape_max(k);
      clamp_unit(factor);
      running *= factor;
      store(t, k, l, T(running));
    }
  }
  return t;
}

template <class T>
CoefficientTable<T> coeff_ratio(const ProbabilityProvider<T>& provider, Direction direction,
                                std::optional<MethodId> tag) {
  if (!provider.supports(direction)) {
    throw ArgumentError(std::string("provider has no ") + std::string(to_string(direction)) +
                        "-direction probability bounds");
  }
  const MethodId method =
      tag.value_or(direction == Direction::lower ? MethodId::ratio_lower : MethodId::ratio_upper);
  auto t = empty_table<T>(method, direction, provider.n(), provider.K());
  if (direction == Direction::lower) {
    for (std::size_t l = 1; l < t.K; ++l) {
      T running = 1;
      for (std::size_t k = l + 1; k <= t.K; ++k) {
        const T reach = provider.reach_min(k, l);
        if (reach == 0) {
          running = 0;
        } else {
          const T skip = provider.skip_max(k, l);
          if (skip != 0) running *= reach / (skip + reach);
        }
        store(t, k, l, T(running));
      }
    }
  } else {
    for (std::size_t k = 2; k <= t.K; ++k) {
      for (std::size_t l = 1; l < k; ++l) {
        const T reach = provider.reach_max(k, l);
        T c = reach == 0 ? T(0) : T(reach / (provider.skip_min(k, l) + reach));
        store(t, k, l, std::move(c));
      }
    }
  }
  return t;
}

template <class T>
CoefficientTable<T> coeff_conditional_upper(const LevelKernel<T>& kernel) {
  require_escapes(kernel);
  auto t = empty_table<T>(MethodId::conditional_upper, Direction::upper, kernel);
  for (std::size_t k = 2; k <= t.K; ++k) {
    for (std::size_t l = 1; l < k; ++l) {
      store(t, k, l, T(kernel.reach_max(k, l) / kernel.escape_min(k)));
    }
  }
  return t;
}

template <class T>
CoefficientTable<T> compute_coefficients(const LevelKernel<T>& kernel, MethodId method,
                                         const std::optional<StartDistribution<T>>& start) {
  switch (method) {
    case MethodId::type0: return coeff_constant(kernel, 0);
    case MethodId::type1: return coeff_constant(kernel, 1);
    case MethodId::viscosity_c: return coeff_viscosity(kernel);
    case MethodId::visit_cl:
      return coeff_visit_probability(kernel,
                                     start ? *start : deterministic_start<T>(kernel.K(), kernel.K()));
    case MethodId::recursive_lower: return coeff_recursive(kernel, Direction::lower);
    case MethodId::recursive_upper: return coeff_recursive(kernel, Direction::upper);
    case MethodId::digraph_product_lower: return coeff_digraph_product(kernel);
    case MethodId::ratio_lower: return coeff_ratio<T>(KernelProvider<T>(kernel), Direction::lower);
    case MethodId::conditional_upper: return coeff_conditional_upper(kernel);
    case MethodId::ratio_upper: return coeff_ratio<T>(KernelProvider<T>(kernel), Direction::upper);
    case MethodId::paper_analytic: break;
  }
  throw ArgumentError("paper-analytic coefficients come from the closed-form provider");
}

#define LEVELBOUND_INSTANTIATE(T)                                                              \
  template struct CoefficientTable<T>;                                                         \
  template StartDistribution<T> deterministic_start<T>(std::size_t, std::size_t);              \
  template void validate_start<T>(const StartDistribution<T>&, std::size_t);                   \
  template CoefficientTable<T> coeff_constant<T>(const LevelKernel<T>&, int);                  \
  template CoefficientTable<T> coeff_viscosity<T>(const LevelKernel<T>&);                      \
  template CoefficientTable<T> coeff_visit_probability<T>(const LevelKernel<T>&,               \
                                                          const StartDistribution<T>&);        \
  template CoefficientTable<T> coeff_recursive<T>(const LevelKernel<T>&, Direction);           \
  template CoefficientTable<T> coeff_digraph_product<T>(const LevelKernel<T>&);                \
  template CoefficientTable<T> coeff_ratio<T>(const ProbabilityProvider<T>&, Direction,        \
                                              std::optional<MethodId>);                        \
  template CoefficientTable<T> coeff_conditional_upper<T>(const LevelKernel<T>&);              \
  template CoefficientTable<T> compute_coefficients<T>(                                        \
      const LevelKernel<T>&, MethodId, const std::optional<StartDistribution<T>>&);

LEVELBOUND_INSTANTIATE(Real)
LEVELBOUND_INSTANTIATE(Rational)

}  // namespace levelbound
