#include "helpers.hpp"

#include "levelbound/coefficients.hpp"
#include "levelbound/errors.hpp"
#include "levelbound/oracle.hpp"
#include "levelbound/shortcuts.hpp"

using namespace levelbound;

namespace {

LevelKernel<Real> kernel_of(FunctionKind f, int n) {
  const auto spec = ProblemSpec::make(f, n);
  return build_kernel<Real>(spec, build_partition(spec));
}

Real eps(int n) { return Real(1) / n; }

}  // namespace

TEST_SUITE("shortcuts") {

TEST_CASE("onemax has no shortcut") {
  for (int n : {10, 100}) {
    const auto r = detect_shortcuts(kernel_of(FunctionKind::onemax, n), eps(n));
    CHECK(r.classification == ShortcutClass::none);
    CHECK(r.weak.empty());
  }
}

TEST_CASE("fullydeceptive n=10: weak (n,1), not strong") {
  const auto r = detect_shortcuts(kernel_of(FunctionKind::fullydeceptive, 10), eps(10));
  CHECK(r.classification == ShortcutClass::weak_only);
  CHECK(r.has_weak(10, 1));
  CHECK_FALSE(r.has_strong(10, 1));
  CHECK(r.strong.empty());
}

TEST_CASE("twomax1 strong shortcut from level n/2+1") {
  // At n = 10 the strong ratio is 0.164 against epsilon 0.1; the claim
  // holds from n = 20 on.
  for (int n : {20, 50}) {
    CAPTURE(n);
    const auto r = detect_shortcuts(kernel_of(FunctionKind::twomax1, n), eps(n));
    CHECK(r.classification == ShortcutClass::strong);
    const std::size_t k = static_cast<std::size_t>(n / 2 + 1);
    for (std::size_t l = 1; l < k; ++l) CHECK(r.has_strong(k, l));
  }
  const auto r10 = detect_shortcuts(kernel_of(FunctionKind::twomax1, 10), eps(10));
  bool found = false;
  for (const auto& p : r10.strong) found = found || (p.k == 6 && p.l == 1);
  CHECK_FALSE(found);
  CHECK(detect_shortcuts(kernel_of(FunctionKind::twomax1, 10), Real("0.2")).has_strong(6, 1));
}

TEST_CASE("epsilon must lie in (0,1)") {
  const auto k = kernel_of(FunctionKind::onemax, 5);
  CHECK_THROWS_AS(detect_shortcuts(k, Real(0)), ArgumentError);
  CHECK_THROWS_AS(detect_shortcuts(k, Real(1)), ArgumentError);
}

TEST_CASE("strong shortcut bounds the digraph coefficient") {
  for (const auto& spec : testing::specs({10, 20})) {
    CAPTURE(testing::label(spec));
    const auto k = build_kernel<Real>(spec, build_partition(spec));
    const auto r = detect_shortcuts(k, eps(spec.n));
    const auto c = coeff_digraph_product(k);
    for (const auto& p : r.strong) {
      for (std::size_t top = p.k; top <= k.K(); ++top) CHECK(c.at(top, p.l) <= p.ratio * (1 + Real("1e-40")));
    }
    // a product never exceeds any of its factors
    for (std::size_t a = 2; a <= k.K(); ++a) {
      for (std::size_t b = 1; b < a; ++b) {
        for (std::size_t i = b + 1; i <= a; ++i) {
          CHECK(c.at(a, b) <= conditional_probability(k, i, b, i - 1).r_min * (1 + Real("1e-40")));
        }
      }
    }
  }
}

TEST_CASE("annotation marks skipped arcs") {
  const auto k = kernel_of(FunctionKind::fullydeceptive, 10);
  auto g = build_digraph(k);
  annotate_shortcuts(g, detect_shortcuts(k, eps(10)));
  bool red_to_zero = false;
  for (const auto& a : g.arcs) {
    if (a.from == 10 && a.to == 0) red_to_zero = a.weak_shortcut;
  }
  CHECK(red_to_zero);
  DotOptions opts;
  opts.annotate_shortcuts = true;
  CHECK(to_dot(g, opts).find("L10 -> L0 [label=\"3.87e-02\", color=red]") != std::string::npos);
}

TEST_CASE("presets") {
  CHECK(preset_subset(FunctionKind::twomax1, 10).retained == std::vector<int>{9, 8, 7, 6, 5, 4});
  CHECK(preset_subset(FunctionKind::twomax1, 4).retained == std::vector<int>{3, 2, 1});
  const auto dec = preset_subset(FunctionKind::deceptive, 10);
  CHECK(dec.retained == std::vector<int>{10, 9, 8, 7, 6, 5});
  CHECK_FALSE(dec.warnings.empty());
  CHECK_THROWS_AS(preset_subset(FunctionKind::onemax, 10), ArgumentError);
}

TEST_CASE("twomax1 preset sub-digraph") {
  const auto spec = ProblemSpec::make(FunctionKind::twomax1, 10);
  const auto sub = build_subdigraph<Real>(spec, preset_subset(FunctionKind::twomax1, 10));
  CHECK(sub.partition.kind == PartitionKind::level_partition);
  CHECK(sub.kernel.K() == 6);
  CHECK(sub.warnings.empty());
  CHECK(sub.kernel.p_min(0, 0) == 1);
  CHECK(sub.kernel.max_row_defect() < Real("1e-60"));
}

TEST_CASE("deceptive preset is reordered by fitness") {
  const auto spec = ProblemSpec::make(FunctionKind::deceptive, 10);
  const auto sub = build_subdigraph<Real>(spec, preset_subset(FunctionKind::deceptive, 10));
  CHECK(sub.partition.levels[1].weights == std::vector<int>{5});
  CHECK_FALSE(sub.warnings.empty());
  for (std::size_t k = 2; k <= sub.kernel.K(); ++k) {
    CHECK(sub.partition.levels[k].fitness <= sub.partition.levels[k - 1].fitness);
  }
}

TEST_CASE("singleton subset keeps the escape probability") {
  const auto spec = ProblemSpec::make(FunctionKind::onemax, 8);
  const auto full = build_kernel<Rational>(spec, build_partition(spec));
  const auto sub = build_subdigraph<Rational>(spec, SubDigraphSpec{{7}, {}});
  REQUIRE(sub.kernel.K() == 1);
  CHECK(sub.kernel.p_min(1, 0) == full.escape_min(1));
}

TEST_CASE("onemax with every non-optimal level keeps the kernel") {
  const auto spec = ProblemSpec::make(FunctionKind::onemax, 7);
  const auto full = build_kernel<Rational>(spec, build_partition(spec));
  const auto sub = build_subdigraph<Rational>(spec, SubDigraphSpec{{6, 5, 4, 3, 2, 1, 0}, {}});
  REQUIRE(sub.kernel.K() == full.K());
  for (std::size_t a = 0; a <= full.K(); ++a) {
    for (std::size_t b = 0; b <= a; ++b) CHECK(sub.kernel.p_min(a, b) == full.p_min(a, b));
  }
}

TEST_CASE("sub-digraph hitting times never exceed the original") {
  for (FunctionKind f : {FunctionKind::twomax1, FunctionKind::deceptive}) {
    for (int n : {8, 10, 20}) {
      CAPTURE(std::string(to_string(f)) + " n=" + std::to_string(n));
      const auto spec = ProblemSpec::make(f, n);
      const auto full = exact_level_hitting(build_kernel<Real>(spec, build_partition(spec)));
      const auto sub = build_subdigraph<Real>(spec, preset_subset(f, n));
      const auto m = exact_level_hitting(sub.kernel);
      CHECK(sub.kernel.max_row_defect() < Real("1e-60"));
      for (std::size_t k = 1; k <= sub.kernel.K(); ++k) {
        CHECK(le_with_slack(m.m[k], full.m[sub.source_levels[k]], 1e-9));
      }
    }
  }
}

}  // TEST_SUITE
