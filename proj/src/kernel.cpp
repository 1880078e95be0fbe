#include "levelbound/kernel.hpp"

#include "levelbound/errors.hpp"

#include <string>

namespace levelbound {

namespace {

template <class T>
std::vector<T> binomial_pmf(int trials, const std::vector<T>& q_pow, const std::vector<T>& r_pow) {
  std::vector<T> pmf(static_cast<std::size_t>(trials) + 1);
  for (int a = 0; a <= trials; ++a) {
    T term = to_scalar<T>(binomial(static_cast<unsigned>(trials), static_cast<unsigned>(a)));
    term *= q_pow[static_cast<std::size_t>(a)];
    term *= r_pow[static_cast<std::size_t>(trials - a)];
    pmf[static_cast<std::size_t>(a)] = std::move(term);
  }
  return pmf;
}

template <class T>
void power_tables(int n, std::vector<T>& q_pow, std::vector<T>& r_pow) {
  const T q = make_ratio<T>(1, n);
  const T r = make_ratio<T>(n - 1, n);
  q_pow.assign(static_cast<std::size_t>(n) + 1, T(1));
  r_pow.assign(static_cast<std::size_t>(n) + 1, T(1));
  for (std::size_t j = 1; j <= static_cast<std::size_t>(n); ++j) {
    q_pow[j] = q_pow[j - 1] * q;
    r_pow[j] = r_pow[j - 1] * r;
  }
}

template <class T>
void check_row_args(int n, int w) {
  if (n < 1) throw ArgumentError("n must be positive");
  if (w < 0 || w > n) {
    throw ArgumentError("weight " + std::to_string(w) + " outside [0," + std::to_string(n) + "]");
  }
}

template <class T>
TriangularTable<T> prefix_sums(const TriangularTable<T>& p) {
  TriangularTable<T> out(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) {
    out[k].assign(k + 1, T(0));
    for (std::size_t l = 1; l <= k; ++l) out[k][l] = out[k][l - 1] + p[k][l - 1];
  }
  return out;
}

template <class T>
TriangularTable<T> suffix_sums(const TriangularTable<T>& p) {
  TriangularTable<T> out(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) {
    out[k].assign(k + 1, T(0));
    for (std::size_t l = k; l-- > 0;) out[k][l] = out[k][l + 1] + p[k][l];
  }
  return out;
}

}  // namespace

template <class T>
std::vector<T> weight_transition_row(int n, int w) {
  check_row_args<T>(n, w);
  std::vector<T> q_pow, r_pow;
  power_tables<T>(n, q_pow, r_pow);
  // a ones flipped out of w, b zeros flipped out of n - w: w' = w - a + b
  const std::vector<T> ones = binomial_pmf<T>(w, q_pow, r_pow);
  const std::vector<T> zeros = binomial_pmf<T>(n - w, q_pow, r_pow);
  std::vector<T> row(static_cast<std::size_t>(n) + 1, T(0));
  for (int a = 0; a <= w; ++a) {
    for (int b = 0; b <= n - w; ++b) {
      row[static_cast<std::size_t>(w - a + b)] +=
          ones[static_cast<std::size_t>(a)] * zeros[static_cast<std::size_t>(b)];
    }
  }
  return row;
}

template <class T>
T weight_transition_probability(int n, int w, int w_after) {
  check_row_args<T>(n, w);
  check_row_args<T>(n, w_after);
  return weight_transition_row<T>(n, w)[static_cast<std::size_t>(w_after)];
}

template <class T>
LevelKernel<T>::LevelKernel(LevelPartition partition, TriangularTable<T> p_min,
                            TriangularTable<T> p_max)
    : partition_(std::move(partition)), p_min_(std::move(p_min)), p_max_(std::move(p_max)) {
  const std::size_t rows = partition_.levels.size();
  if (p_min_.size() != rows || p_max_.size() != rows) {
    throw ArgumentError("kernel tables do not match the partition size");
  }
  exact_ = true;
  for (std::size_t k = 0; k < rows; ++k) {
    if (p_min_[k].size() != k + 1 || p_max_[k].size() != k + 1) {
      throw ArgumentError("kernel row " + std::to_string(k) + " has the wrong length");
    }
    for (std::size_t l = 0; l <= k; ++l) {
      if (p_min_[k][l] < 0 || p_max_[k][l] > 1 || p_min_[k][l] > p_max_[k][l]) {
        throw ArgumentError("kernel entry (" + std::to_string(k) + "," + std::to_string(l) +
                            ") violates 0 <= p_min <= p_max <= 1");
      }
      if (p_min_[k][l] != p_max_[k][l]) exact_ = false;
    }
  }
  prefix_min_ = prefix_sums(p_min_);
  prefix_max_ = prefix_sums(p_max_);
  suffix_min_ = suffix_sums(p_min_);
  suffix_max_ = suffix_sums(p_max_);
}

template <class T>
T LevelKernel<T>::range_min(std::size_t k, std::size_t lo, std::size_t hi) const {
  if (lo > hi || hi >= k) throw ArgumentError("range must satisfy lo <= hi < k");
  if (lo == 0) return prefix_min_[k][hi + 1];
  if (hi + 1 == k) return suffix_min_[k][lo];
  T sum = 0;
  for (std::size_t l = lo; l <= hi; ++l) sum += p_min_[k][l];
  return sum;
}

template <class T>
T LevelKernel<T>::range_max(std::size_t k, std::size_t lo, std::size_t hi) const {
  if (lo > hi || hi >= k) throw ArgumentError("range must satisfy lo <= hi < k");
  if (lo == 0) return prefix_max_[k][hi + 1];
  if (hi + 1 == k) return suffix_max_[k][lo];
  T sum = 0;
  for (std::size_t l = lo; l <= hi; ++l) sum += p_max_[k][l];
  return sum;
}

template <class T>
T LevelKernel<T>::max_row_defect() const {
  T worst = 0;
  for (const auto* table : {&p_min_, &p_max_}) {
    for (const auto& row : *table) {
      T sum = 0;
      for (const T& v : row) sum += v;
      T defect = sum > 1 ? T(sum - 1) : T(1 - sum);
      if (defect > worst) worst = defect;
    }
  }
  return worst;
}

template <class T>
LevelKernel<T> build_kernel(const ProblemSpec& spec, const LevelPartition& partition) {
  spec.validate();
  if (partition.n != spec.n) throw ArgumentError("partition and problem disagree on n");
  const int n = spec.n;
  const std::size_t K = partition.K();

  std::vector<std::size_t> level_of(static_cast<std::size_t>(n) + 1);
  for (int w = 0; w <= n; ++w) level_of[static_cast<std::size_t>(w)] = partition.level_of_weight(w);
  std::vector<Rational> fit(static_cast<std::size_t>(n) + 1);
  for (int w = 0; w <= n; ++w) fit[static_cast<std::size_t>(w)] = spec.fitness(w);

  TriangularTable<T> p(K + 1);
  p[0].assign(1, T(1));
  for (std::size_t k = 1; k <= K; ++k) {
    p[k].assign(k + 1, T(0));
    const auto& weights = partition.levels[k].weights;
    if (weights.size() != 1) {
      throw UnsupportedPartitionError("level " + std::to_string(k) + " holds " +
                                      std::to_string(weights.size()) +
                                      " weight classes; lumping is not guaranteed");
    }
    const int w = weights.front();
    const std::vector<T> row = weight_transition_row<T>(n, w);
    for (int w2 = 0; w2 <= n; ++w2) {
      const std::size_t idx = static_cast<std::size_t>(w2);
      const bool accepted = w2 != w && fit[idx] >= fit[static_cast<std::size_t>(w)];
      if (!accepted) {
        p[k][k] += row[idx];
        continue;
      }
      const std::size_t target = level_of[idx];
      if (target >= k) {
        throw UnsupportedPartitionError("accepted move from level " + std::to_string(k) +
                                        " into level " + std::to_string(target) +
                                        " breaks the level order");
      }
      p[k][target] += row[idx];
    }
    // summed directly, so rounding can leave it a few ulps above 1
    clamp_unit(p[k][k]);
  }
  TriangularTable<T> copy = p;
  return LevelKernel<T>(partition, std::move(p), std::move(copy));
}

template <class T>
ConditionalProbability<T> conditional_probability(const LevelKernel<T>& kernel, std::size_t k,
                                                  std::size_t lo, std::size_t hi) {
  if (k > kernel.K() || lo > hi || hi >= k) {
    throw ArgumentError("conditional probability needs 0 <= lo <= hi < k <= K");
  }
  if (kernel.escape_max(k) == 0 || kernel.escape_min(k) == 0) {
    throw UnreachableLevelError("level " + std::to_string(k) + " cannot reach higher levels");
  }
  ConditionalProbability<T> out{kernel.range_min(k, lo, hi) / kernel.escape_max(k),
                                kernel.range_max(k, lo, hi) / kernel.escape_min(k)};
  clamp_unit(out.r_min);
  clamp_unit(out.r_max);
  return out;
}

#define LEVELBOUND_INSTANTIATE(T)                                                              \
  template T weight_transition_probability<T>(int, int, int);                                  \
  template std::vector<T> weight_transition_row<T>(int, int);                                  \
  template class LevelKernel<T>;                                                               \
  template LevelKernel<T> build_kernel<T>(const ProblemSpec&, const LevelPartition&);          \
  template ConditionalProbability<T> conditional_probability<T>(const LevelKernel<T>&,         \
                                                                std::size_t, std::size_t,      \
                                                                std::size_t);

LEVELBOUND_INSTANTIATE(Real)
LEVELBOUND_INSTANTIATE(Rational)

}  // namespace levelbound
