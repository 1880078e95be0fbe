#pragma once

#include "levelbound/coefficients.hpp"
#include "levelbound/kernel.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace levelbound {

enum class OracleMode { level_chain, full_state };

std::string_view to_string(OracleMode mode);

/// Mean hitting times of level 0 per starting level. Unreachable levels
/// carry reachable[k] == false and m[k] == 0 as a placeholder.
template <class T>
struct OracleResult {
  OracleMode mode = OracleMode::level_chain;
  std::vector<T> m;
  std::vector<bool> reachable;
  /// full_state only: max relative spread of hitting times within a level.
  std::optional<Real> lumpability_deviation;
  /// full_state only: observed kernel over all states of each level,
  /// min and max per (k, l), for comparison against the representative
  /// kernel.
  std::optional<TriangularTable<T>> observed_p_min, observed_p_max;

  bool all_reachable() const;
};

/// First-step analysis on the level chain, solved by forward substitution
/// in level order. Requires an exact kernel.
template <class T>
OracleResult<T> exact_level_hitting(const LevelKernel<T>& kernel);

/// Probability that the chain started from `start` ever occupies each
/// level, from an exact kernel.
template <class T>
std::vector<T> visit_probabilities(const LevelKernel<T>& kernel, const StartDistribution<T>& start);

inline constexpr std::size_t kPathSumMaxLevels = 12;

/// Sum over all digraph paths k -> ... -> l of the product of r_min along
/// the arcs. Refuses kernels with K > kPathSumMaxLevels.
template <class T>
T path_sum_coefficient(const LevelKernel<T>& kernel, std::size_t k, std::size_t l);

inline constexpr int kFullStateMaxN = 20;
inline constexpr int kFullStateMaxNExact = 12;

/// Brute force over all 2^n strings with the fitness partition of `spec`.
/// Accepted-move counts per state are obtained by XOR convolution over the
/// hypercube, so no weight-class lumping is assumed. Refuses n above
/// kFullStateMaxN (kFullStateMaxNExact for Rational).
template <class T>
OracleResult<T> exact_full_hitting(const ProblemSpec& spec);

}  // namespace levelbound
