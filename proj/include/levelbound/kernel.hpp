#pragma once

#include "levelbound/partition.hpp"

#include <cstddef>
#include <vector>

namespace levelbound {

/// Probability that bitwise mutation with rate 1/n turns a string of weight
/// `w` into one of weight `w_after`.
template <class T>
T weight_transition_probability(int n, int w, int w_after);

/// The whole row w -> 0..n of the above.
template <class T>
std::vector<T> weight_transition_row(int n, int w);

/// Lower-triangular table: row k holds entries for targets 0..k.
template <class T>
using TriangularTable = std::vector<std::vector<T>>;

/// Level-to-level transition probabilities of an elitist chain, held as
/// entrywise bounds p_min <= p <= p_max. Rows are indexed by the source
/// level; only targets at or above the source (index <= k) exist.
///
/// Range sums over consecutive targets are precomputed as prefix
/// ([0, l-1]) and suffix ([l, k-1]) accumulations of nonnegative terms, so
/// tiny ranges next to large ones keep full relative precision.
template <class T>
class LevelKernel {
 public:
  LevelKernel(LevelPartition partition, TriangularTable<T> p_min, TriangularTable<T> p_max);

  const LevelPartition& partition() const { return partition_; }
  std::size_t K() const { return partition_.K(); }
  bool exact() const { return exact_; }

  const T& p_min(std::size_t k, std::size_t l) const { return p_min_[k][l]; }
  const T& p_max(std::size_t k, std::size_t l) const { return p_max_[k][l]; }

  /// p(k, [0, l-1]); l == k gives the escape probability.
  const T& skip_min(std::size_t k, std::size_t l) const { return prefix_min_[k][l]; }
  const T& skip_max(std::size_t k, std::size_t l) const { return prefix_max_[k][l]; }
  /// p(k, [l, k-1]).
  const T& reach_min(std::size_t k, std::size_t l) const { return suffix_min_[k][l]; }
  const T& reach_max(std::size_t k, std::size_t l) const { return suffix_max_[k][l]; }

  const T& escape_min(std::size_t k) const { return prefix_min_[k][k]; }
  const T& escape_max(std::size_t k) const { return prefix_max_[k][k]; }

  /// Sum over targets lo..hi (hi < k) of the entrywise bounds.
  T range_min(std::size_t k, std::size_t lo, std::size_t hi) const;
  T range_max(std::size_t k, std::size_t lo, std::size_t hi) const;

  /// Largest |row sum - 1| over both tables.
  T max_row_defect() const;

 private:
  LevelPartition partition_;
  TriangularTable<T> p_min_;
  TriangularTable<T> p_max_;
  TriangularTable<T> prefix_min_, prefix_max_;
  TriangularTable<T> suffix_min_, suffix_max_;
  bool exact_ = false;
};

/// Exact kernel of the (1+1) EA from one representative per level. Every
/// non-absorbing level must be a single weight class; accepted moves
/// (f(y) >= f(x)) into other levels are summed, the rest fold into the
/// self-loop.
template <class T>
LevelKernel<T> build_kernel(const ProblemSpec& spec, const LevelPartition& partition);

template <class T>
struct ConditionalProbability {
  T r_min;
  T r_max;
};

/// r(k, S_[lo,hi]) bounds: p_min(k,[lo,hi]) / p_max(k,[0,k-1]) and
/// p_max(k,[lo,hi]) / p_min(k,[0,k-1]), clamped to [0,1].
template <class T>
ConditionalProbability<T> conditional_probability(const LevelKernel<T>& kernel, std::size_t k,
                                                  std::size_t lo, std::size_t hi);

}  // namespace levelbound
