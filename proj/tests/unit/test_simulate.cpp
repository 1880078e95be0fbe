#include "helpers.hpp"

#include "levelbound/errors.hpp"
#include "levelbound/oracle.hpp"
#include "levelbound/simulate.hpp"

#include <cmath>

using namespace levelbound;

TEST_SUITE("simulate") {

TEST_CASE("onemax n=2 mean is 4") {
  SimulationConfig cfg;
  cfg.spec = ProblemSpec::make(FunctionKind::onemax, 2);
  cfg.start_level = 2;
  cfg.trials = 100000;
  cfg.seed = 12345;
  const auto r = run_trials(cfg);
  CHECK(r.uncensored == cfg.trials);
  CHECK(std::abs(r.mean - 4.0) <= 3 * r.stderr_mean);
}

TEST_CASE("start at the optimum") {
  SimulationConfig cfg;
  cfg.spec = ProblemSpec::make(FunctionKind::deceptive, 10);
  cfg.start_level = 0;
  cfg.trials = 50;
  const auto r = run_trials(cfg);
  for (auto t : r.hitting_times) CHECK(t == 0);
  CHECK(r.mean == 0);
}

TEST_CASE("visit frequency matches the exact visit probability") {
  const int n = 10;
  SimulationConfig cfg;
  cfg.spec = ProblemSpec::make(FunctionKind::twomax1, n);
  const auto part = build_partition(cfg.spec);
  const auto kernel = build_kernel<Real>(cfg.spec, part);
  // level of weight n-1
  cfg.start_level = part.level_of_weight(n - 1);
  cfg.trials = 10000;
  cfg.seed = 777;
  const auto r = run_trials(cfg);
  const auto v = visit_probabilities(kernel, deterministic_start<Real>(kernel.K(), cfg.start_level));
  const double p = to_double(v[1]);
  const double se = std::sqrt(p * (1 - p) / static_cast<double>(cfg.trials));
  CHECK(std::abs(r.visit_frequency[1] - p) <= 3 * se + 1e-12);
}

TEST_CASE("reproducible per seed and independent of trial count") {
  SimulationConfig cfg;
  cfg.spec = ProblemSpec::make(FunctionKind::fullydeceptive, 8);
  cfg.start_level = 4;
  cfg.trials = 64;
  cfg.seed = 99;
  const auto a = run_trials(cfg);
  const auto b = run_trials(cfg);
  CHECK(a.hitting_times == b.hitting_times);
  cfg.trials = 32;
  const auto c = run_trials(cfg);
  CHECK(std::equal(c.hitting_times.begin(), c.hitting_times.end(), a.hitting_times.begin()));
  cfg.seed = 100;
  CHECK(run_trials(cfg).hitting_times != c.hitting_times);
  CHECK_FALSE(a.generator.empty());
}

TEST_CASE("traces never move to a worse level") {
  SimulationConfig cfg;
  cfg.spec = ProblemSpec::make(FunctionKind::twomax1, 12);
  cfg.start_level = build_partition(cfg.spec).K();
  cfg.trials = 40;
  cfg.seed = 5;
  cfg.record_traces = true;
  const auto r = run_trials(cfg);
  REQUIRE(r.traces.size() == cfg.trials);
  for (const auto& trace : r.traces) {
    REQUIRE_FALSE(trace.empty());
    CHECK(trace.front() == cfg.start_level);
    for (std::size_t i = 1; i < trace.size(); ++i) CHECK(trace[i] <= trace[i - 1]);
  }
}

TEST_CASE("censoring") {
  SimulationConfig cfg;
  cfg.spec = ProblemSpec::make(FunctionKind::fullydeceptive, 12);
  cfg.start_level = 1;  // all ones: only the n^-n jump escapes
  cfg.trials = 10;
  cfg.max_generations = 100;
  const auto r = run_trials(cfg);
  CHECK(r.censored_fraction == 1.0);
  CHECK(r.unreliable);
  CHECK(r.max_generations == 100);
  CHECK(default_generation_cap(10) == static_cast<std::uint64_t>(std::ceil(1e4 * 10 * std::log(11.0))));
}

TEST_CASE("start distribution") {
  SimulationConfig cfg;
  cfg.spec = ProblemSpec::make(FunctionKind::onemax, 6);
  cfg.start_distribution = std::vector<double>{1, 0, 0, 0, 0, 0, 0};
  cfg.trials = 10;
  CHECK(run_trials(cfg).mean == 0);
  cfg.start_distribution = std::vector<double>{0.5, 0.5};
  CHECK_THROWS_AS(run_trials(cfg), ArgumentError);
}

}  // TEST_SUITE
