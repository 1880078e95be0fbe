#include "levelbound/partition.hpp"

#include "levelbound/errors.hpp"

#include <algorithm>
#include <map>

namespace levelbound {

std::size_t LevelPartition::level_of_weight(int w) const {
  for (std::size_t k = 0; k < levels.size(); ++k) {
    const auto& ws = levels[k].weights;
    if (std::binary_search(ws.begin(), ws.end(), w)) return k;
  }
  if (kind == PartitionKind::level_partition) return 0;
  throw ArgumentError("weight " + std::to_string(w) + " is not covered by the partition");
}

bool LevelPartition::same_shape(const LevelPartition& other) const {
  if (n != other.n || kind != other.kind || levels.size() != other.levels.size()) return false;
  for (std::size_t k = 0; k < levels.size(); ++k) {
    if (levels[k].weights != other.levels[k].weights) return false;
  }
  return true;
}

LevelPartition build_partition(const ProblemSpec& spec) {
  spec.validate();
  // descending fitness -> weights with that fitness
  std::map<Rational, std::vector<int>, std::greater<>> by_fitness;
  for (int w = 0; w <= spec.n; ++w) by_fitness[spec.fitness(w)].push_back(w);

  LevelPartition partition;
  partition.n = spec.n;
  partition.kind = PartitionKind::fitness_partition;
  for (auto& [f, ws] : by_fitness) partition.levels.push_back(Level{ws, f});
  return partition;
}

LevelPartition make_level_partition(const ProblemSpec& spec, const std::vector<int>& retained) {
  spec.validate();
  if (retained.empty()) throw ArgumentError("a level partition needs at least one retained level");
  const Rational best = spec.max_fitness();
  std::vector<bool> used(static_cast<std::size_t>(spec.n) + 1, false);
  for (int w : retained) {
    if (w < 0 || w > spec.n) throw ArgumentError("retained weight out of range: " + std::to_string(w));
    if (used[static_cast<std::size_t>(w)]) {
      throw ArgumentError("retained weight listed twice: " + std::to_string(w));
    }
    if (spec.fitness(w) == best) {
      throw ArgumentError("retained weight " + std::to_string(w) + " is optimal");
    }
    used[static_cast<std::size_t>(w)] = true;
  }

  LevelPartition partition;
  partition.n = spec.n;
  partition.kind = PartitionKind::level_partition;

  Level complement;
  bool first = true;
  for (int w = 0; w <= spec.n; ++w) {
    if (used[static_cast<std::size_t>(w)]) continue;
    complement.weights.push_back(w);
    Rational f = spec.fitness(w);
    if (first || f > complement.fitness) complement.fitness = f;
    first = false;
  }
  partition.levels.push_back(std::move(complement));
  for (int w : retained) partition.levels.push_back(Level{{w}, spec.fitness(w)});

  for (std::size_t k = 2; k < partition.levels.size(); ++k) {
    if (!(partition.levels[k].fitness < partition.levels[k - 1].fitness)) {
      partition.warnings.push_back("retained level " + std::to_string(k) + " (w=" +
                                   std::to_string(partition.levels[k].weights.front()) +
                                   ") does not have lower fitness than level " +
                                   std::to_string(k - 1));
    }
  }
  return partition;
}

}  // namespace levelbound
