#include "levelbound/oracle.hpp"

#include "levelbound/errors.hpp"

#include <string>

namespace levelbound {

std::string_view to_string(OracleMode mode) {
  return mode == OracleMode::level_chain ? "level_chain" : "full_state";
}

template <class T>
bool OracleResult<T>::all_reachable() const {
  for (bool r : reachable) {
    if (!r) return false;
  }
  return true;
}

template <class T>
OracleResult<T> exact_level_hitting(const LevelKernel<T>& kernel) {
  if (!kernel.exact()) throw ArgumentError("the level-chain oracle needs an exact kernel");
  const std::size_t K = kernel.K();
  OracleResult<T> out;
  out.mode = OracleMode::level_chain;
  out.m.assign(K + 1, T(0));
  out.reachable.assign(K + 1, true);
  for (std::size_t k = 1; k <= K; ++k) {
    if (kernel.escape_min(k) == 0) {
      out.reachable[k] = false;
      continue;
    }
    T num = 1;
    for (std::size_t l = 1; l < k; ++l) {
      if (kernel.p_min(k, l) == 0) continue;
      if (!out.reachable[l]) {
        out.reachable[k] = false;
        break;
      }
      num += kernel.p_min(k, l) * out.m[l];
    }
    if (out.reachable[k]) out.m[k] = num / kernel.escape_min(k);
  }
  return out;
}

template <class T>
std::vector<T> visit_probabilities(const LevelKernel<T>& kernel, const StartDistribution<T>& start) {
  if (!kernel.exact()) throw ArgumentError("visit probabilities need an exact kernel");
  const std::size_t K = kernel.K();
  validate_start(start, K);
  std::vector<T> v(K + 1, T(0));
  for (std::size_t l = K + 1; l-- > 0;) {
    T sum = start[l];
    for (std::size_t j = l + 1; j <= K; ++j) {
      if (v[j] == 0 || kernel.escape_min(j) == 0) continue;
      sum += v[j] * kernel.p_min(j, l) / kernel.escape_min(j);
    }
    v[l] = std::move(sum);
  }
  return v;
}

namespace {

template <class T>
T path_sum_from(const LevelKernel<T>& kernel, std::size_t cur, std::size_t target) {
  T total = 0;
  for (std::size_t j = target; j < cur; ++j) {
    if (kernel.p_min(cur, j) == 0) continue;
    T r = kernel.p_min(cur, j) / kernel.escape_max(cur);
    if (j == target) {
      total += r;
    } else {
      total += r * path_sum_from(kernel, j, target);
    }
  }
  return total;
}

}  // namespace

template <class T>
T path_sum_coefficient(const LevelKernel<T>& kernel, std::size_t k, std::size_t l) {
  if (kernel.K() > kPathSumMaxLevels) {
    throw GuardError("path expansion refused: K = " + std::to_string(kernel.K()) + " exceeds " +
                     std::to_string(kPathSumMaxLevels));
  }
  if (l > k || k > kernel.K()) throw ArgumentError("path sum needs l <= k <= K");
  if (l == k) return T(1);
  for (std::size_t i = l + 1; i <= k; ++i) {
    if (kernel.escape_max(i) == 0) {
      throw UnreachableLevelError("level " + std::to_string(i) + " cannot reach higher levels");
    }
  }
  return path_sum_from(kernel, k, l);
}

template struct OracleResult<Real>;
template struct OracleResult<Rational>;
template OracleResult<Real> exact_level_hitting<Real>(const LevelKernel<Real>&);
template OracleResult<Rational> exact_level_hitting<Rational>(const LevelKernel<Rational>&);
template std::vector<Real> visit_probabilities<Real>(const LevelKernel<Real>&,
                                                     const StartDistribution<Real>&);
template std::vector<Rational> visit_probabilities<Rational>(const LevelKernel<Rational>&,
                                                             const StartDistribution<Rational>&);
template Real path_sum_coefficient<Real>(const LevelKernel<Real>&, std::size_t, std::size_t);
template Rational path_sum_coefficient<Rational>(const LevelKernel<Rational>&, std::size_t,
                                                 std::size_t);

}  // namespace levelbound
