#pragma once

#include "levelbound/problem.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace levelbound {

enum class PartitionKind { fitness_partition, level_partition };

struct Level {
  std::vector<int> weights;  // Hamming-weight classes, ascending
  Rational fitness;          // for a level-partition complement: the best fitness it holds
};

/// Ordered levels S_0..S_K. For a fitness partition the levels cover every
/// weight and fitness strictly decreases with k. For a level partition,
/// levels 1..K are retained non-optimal classes and level 0 is the
/// absorbing complement.
struct LevelPartition {
  int n = 0;
  PartitionKind kind = PartitionKind::fitness_partition;
  std::vector<Level> levels;
  std::vector<std::string> warnings;

  std::size_t K() const { return levels.size() - 1; }
  /// Level holding weight `w`; for level partitions unretained weights map to 0.
  std::size_t level_of_weight(int w) const;
  bool same_shape(const LevelPartition& other) const;
};

LevelPartition build_partition(const ProblemSpec& spec);

/// Level partition from an ordered list of retained weights (index 1..K).
/// Weights are not reordered here; see build_subdigraph for normalization.
LevelPartition make_level_partition(const ProblemSpec& spec, const std::vector<int>& retained);

}  // namespace levelbound
