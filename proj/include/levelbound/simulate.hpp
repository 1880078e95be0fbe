#pragma once

#include "levelbound/partition.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace levelbound {

struct SimulationConfig {
  ProblemSpec spec;
  /// Start level in the fitness partition of `spec`; ignored when
  /// start_distribution is set.
  std::size_t start_level = 0;
  /// Optional law over levels 0..K for the initial level.
  std::optional<std::vector<double>> start_distribution;
  std::uint64_t trials = 1;
  std::uint64_t seed = 0;
  /// 0 selects the default cap 10^4 * n * ln(n+1).
  std::uint64_t max_generations = 0;
  /// Keep each trial's sequence of occupied levels.
  bool record_traces = false;
};

struct SimulationResult {
  std::vector<std::uint64_t> hitting_times;  // generations; the cap when censored
  std::vector<bool> censored;
  std::uint64_t uncensored = 0;
  double censored_fraction = 0;
  bool unreliable = false;  // more than half of the trials censored
  double mean = 0;          // over uncensored trials
  double stddev = 0;        // sample standard deviation
  double stderr_mean = 0;
  /// Fraction of trials that ever occupy each level, index 0..K.
  std::vector<double> visit_frequency;
  std::vector<std::vector<std::uint32_t>> traces;
  std::uint64_t max_generations = 0;
  std::string generator;
};

std::uint64_t default_generation_cap(int n);

/// Runs the (1+1) EA at the bit-string level. Trial t draws from its own
/// mt19937_64 seeded by (seed, t), so results do not depend on trial order.
SimulationResult run_trials(const SimulationConfig& config);

}  // namespace levelbound
