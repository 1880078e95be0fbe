#include "levelbound/simulate.hpp"

#include "levelbound/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

namespace levelbound {

namespace {

std::mt19937_64 trial_engine(std::uint64_t seed, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  return std::mt19937_64(seq);
}

}  // namespace

std::uint64_t default_generation_cap(int n) {
  return static_cast<std::uint64_t>(std::ceil(1e4 * n * std::log(n + 1.0)));
}

SimulationResult run_trials(const SimulationConfig& config) {
  const ProblemSpec& spec = config.spec;
  spec.validate();
  if (config.trials < 1) throw ArgumentError("trials must be at least 1");
  const LevelPartition partition = build_partition(spec);
  const std::size_t K = partition.K();
  const int n = spec.n;

  std::vector<double> start_law;
  if (config.start_distribution) {
    start_law = *config.start_distribution;
    if (start_law.size() != K + 1) {
      throw ArgumentError("start distribution needs " + std::to_string(K + 1) + " entries");
    }
    double sum = 0;
    for (double v : start_law) {
      if (!(v >= 0)) throw ArgumentError("start distribution has a negative entry");
      sum += v;
    }
    if (std::abs(sum - 1) > 1e-9) throw ArgumentError("start distribution does not sum to 1");
  } else {
    if (config.start_level > K) {
      throw ArgumentError("start level " + std::to_string(config.start_level) + " exceeds K = " +
                          std::to_string(K));
    }
    start_law.assign(K + 1, 0.0);
    start_law[config.start_level] = 1;
  }

  std::vector<std::size_t> level_of(static_cast<std::size_t>(n) + 1);
  std::vector<Rational> fit(static_cast<std::size_t>(n) + 1);
  for (int w = 0; w <= n; ++w) {
    level_of[static_cast<std::size_t>(w)] = partition.level_of_weight(w);
    fit[static_cast<std::size_t>(w)] = spec.fitness(w);
  }
  // integer fitness ranks keep the acceptance test exact and cheap
  std::vector<int> rank(fit.size());
  for (std::size_t w = 0; w < fit.size(); ++w) {
    rank[w] = static_cast<int>(std::count_if(fit.begin(), fit.end(),
                                             [&](const Rational& f) { return f < fit[w]; }));
  }

  // weight classes per level, weighted by class size for the start draw
  std::vector<std::vector<int>> class_weights(K + 1);
  std::vector<std::vector<double>> class_sizes(K + 1);
  for (std::size_t k = 0; k <= K; ++k) {
    for (int w : partition.levels[k].weights) {
      class_weights[k].push_back(w);
      class_sizes[k].push_back(binomial(static_cast<unsigned>(n), static_cast<unsigned>(w))
                                   .convert_to<double>());
    }
  }

  SimulationResult result;
  result.generator = "mt19937_64 per trial, seed_seq(seed lo, seed hi, trial lo, trial hi)";
  result.max_generations = config.max_generations != 0 ? config.max_generations
                                                       : default_generation_cap(n);
  result.hitting_times.resize(config.trials);
  result.censored.assign(config.trials, false);
  std::vector<std::uint64_t> visits(K + 1, 0);
  if (config.record_traces) result.traces.resize(config.trials);

  const double q = 1.0 / n;
  std::vector<char> x(static_cast<std::size_t>(n));
  std::vector<int> positions(static_cast<std::size_t>(n));
  std::vector<int> flips;
  std::vector<bool> visited(K + 1);

  for (std::uint64_t t = 0; t < config.trials; ++t) {
    auto rng = trial_engine(config.seed, t);
    std::discrete_distribution<std::size_t> pick_level(start_law.begin(), start_law.end());
    const std::size_t k0 = pick_level(rng);
    std::discrete_distribution<std::size_t> pick_class(class_sizes[k0].begin(),
                                                       class_sizes[k0].end());
    int w = class_weights[k0][pick_class(rng)];

    // uniform string of weight w: first w entries of a random permutation
    std::iota(positions.begin(), positions.end(), 0);
    std::fill(x.begin(), x.end(), 0);
    for (int i = 0; i < w; ++i) {
      std::uniform_int_distribution<int> pick(i, n - 1);
      std::swap(positions[static_cast<std::size_t>(i)],
                positions[static_cast<std::size_t>(pick(rng))]);
      x[static_cast<std::size_t>(positions[static_cast<std::size_t>(i)])] = 1;
    }

    std::fill(visited.begin(), visited.end(), false);
    std::size_t level = level_of[static_cast<std::size_t>(w)];
    visited[level] = true;
    if (config.record_traces) result.traces[t].push_back(static_cast<std::uint32_t>(level));

    std::geometric_distribution<int> gap(q);
    std::uint64_t gen = 0;
    while (level != 0 && gen < result.max_generations) {
      ++gen;
      flips.clear();
      int delta = 0;
      for (int pos = gap(rng); pos < n; pos += 1 + gap(rng)) {
        flips.push_back(pos);
        delta += x[static_cast<std::size_t>(pos)] ? -1 : 1;
      }
      if (flips.empty()) continue;
      const int w2 = w + delta;
      if (rank[static_cast<std::size_t>(w2)] < rank[static_cast<std::size_t>(w)]) continue;
      for (int pos : flips) x[static_cast<std::size_t>(pos)] ^= 1;
      w = w2;
      const std::size_t next = level_of[static_cast<std::size_t>(w)];
      if (next != level) {
        level = next;
        visited[level] = true;
        if (config.record_traces) result.traces[t].push_back(static_cast<std::uint32_t>(level));
      }
    }
    result.hitting_times[t] = gen;
    if (level != 0) result.censored[t] = true;
    for (std::size_t k = 0; k <= K; ++k) visits[k] += visited[k] ? 1 : 0;
  }

  double sum = 0;
  for (std::uint64_t t = 0; t < config.trials; ++t) {
    if (result.censored[t]) continue;
    ++result.uncensored;
    sum += static_cast<double>(result.hitting_times[t]);
  }
  const double total = static_cast<double>(config.trials);
  result.censored_fraction = 1.0 - static_cast<double>(result.uncensored) / total;
  result.unreliable = result.censored_fraction > 0.5;
  if (result.uncensored > 0) {
    result.mean = sum / static_cast<double>(result.uncensored);
    double ss = 0;
    for (std::uint64_t t = 0; t < config.trials; ++t) {
      if (result.censored[t]) continue;
      const double d = static_cast<double>(result.hitting_times[t]) - result.mean;
      ss += d * d;
    }
    if (result.uncensored > 1) {
      result.stddev = std::sqrt(ss / static_cast<double>(result.uncensored - 1));
      result.stderr_mean = result.stddev / std::sqrt(static_cast<double>(result.uncensored));
    }
  }
  result.visit_frequency.resize(K + 1);
  for (std::size_t k = 0; k <= K; ++k) {
    result.visit_frequency[k] = static_cast<double>(visits[k]) / total;
  }
  return result;
}

}  // namespace levelbound
