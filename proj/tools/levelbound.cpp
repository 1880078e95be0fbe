// levelbound: fitness-level hitting-time bounds for the (1+1) EA.
//
// Subcommands: analyze, coefficients, digraph, oracle, simulate,
// verify-appendix. Exit codes: 0 success, 2 usage error, 3 guard refusal.

#include "levelbound/appendix.hpp"
#include "levelbound/bounds.hpp"
#include "levelbound/digraph.hpp"
#include "levelbound/errors.hpp"
#include "levelbound/oracle.hpp"
#include "levelbound/shortcuts.hpp"
#include "levelbound/simd/wht.hpp"
#include "levelbound/simulate.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <memory>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

#ifndef LEVELBOUND_VERSION
#define LEVELBOUND_VERSION "0.0.0"
#endif

using namespace levelbound;
using nlohmann::json;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitGuard = 3;

json float_or_string(double v) {
  if (std::isnan(v)) return "NaN";
  if (std::isinf(v)) return v > 0 ? "Infinity" : "-Infinity";
  return v;
}

/// Every number goes out as full-precision decimal, 64-bit float, and
/// natural log.
json number(const Real& v) {
  const double log_v = v > 0 ? to_double(log_of(v)) : (v == 0 ? -INFINITY : NAN);
  return json{{"decimal", to_decimal(v)}, {"float", float_or_string(to_double(v))},
              {"log", float_or_string(log_v)}};
}

json number(const Rational& v) {
  json out = number(Real(v));
  out["fraction"] = to_fraction(v);
  return out;
}

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void write_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp);
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("write failed for " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

void emit(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
  } else {
    write_atomic(path, content);
  }
}

struct Common {
  std::string function = "onemax";
  int n = 0;
  unsigned precision = 0;
  std::string out;
};

json manifest(const std::string& command, const json& params, unsigned bits,
              std::optional<std::uint64_t> seed = std::nullopt) {
  json m{{"command", command},
         {"params", params},
         {"version", LEVELBOUND_VERSION},
         {"precision_bits", bits},
         {"timestamp", utc_timestamp()},
         {"seed", seed ? json(*seed) : json(nullptr)}};
  return m;
}

FunctionKind function_arg(const std::string& name) {
  const auto f = parse_function(name);
  if (!f || *f == FunctionKind::custom) {
    throw ArgumentError("unknown function '" + name +
                        "' (expected onemax, fullydeceptive, twomax1, deceptive)");
  }
  return *f;
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

json partition_json(const LevelPartition& p) {
  json levels = json::array();
  for (std::size_t k = 0; k < p.levels.size(); ++k) {
    levels.push_back({{"k", k}, {"weights", p.levels[k].weights}, {"fitness", p.levels[k].fitness.str()}});
  }
  return json{{"kind", p.kind == PartitionKind::fitness_partition ? "fitness_partition" : "level_partition"},
              {"K", p.K()},
              {"levels", levels},
              {"warnings", p.warnings}};
}

json shortcuts_json(const ShortcutReport& r) {
  auto pairs = [](const std::vector<ShortcutPair>& ps) {
    json a = json::array();
    for (const auto& p : ps) a.push_back({{"k", p.k}, {"l", p.l}, {"ratio", number(p.ratio)}});
    return a;
  };
  return json{{"epsilon", number(r.epsilon)},
              {"classification", std::string(to_string(r.classification))},
              {"weak", pairs(r.weak)},
              {"strong", pairs(r.strong)}};
}

template <class T>
json oracle_json(const OracleResult<T>& r) {
  json m = json::array();
  for (std::size_t k = 0; k < r.m.size(); ++k) m.push_back(r.reachable[k] ? number(r.m[k]) : json(nullptr));
  json out{{"mode", std::string(to_string(r.mode))}, {"m", m}, {"all_reachable", r.all_reachable()}};
  if (r.lumpability_deviation) out["lumpability_deviation"] = number(*r.lumpability_deviation);
  return out;
}

json series_json(const BoundSeries<Real>& s, const CoefficientTable<Real>* coeffs) {
  json d = json::array();
  for (const auto& v : s.d) d.push_back(number(v));
  json out{{"method", std::string(to_string(s.method))},
           {"direction", std::string(to_string(s.direction))},
           {"d", d}};
  if (coeffs) {
    out["coefficient_min"] = number(coeffs->min_value());
    if (coeffs->scalar) out["viscosity"] = number(*coeffs->scalar);
    if (coeffs->per_level) {
      json cl = json::array();
      for (const auto& v : *coeffs->per_level) cl.push_back(number(v));
      out["visit_probability"] = cl;
    }
    out["notes"] = coeffs->notes;
  }
  return out;
}

StartDistribution<Real> parse_start(const std::string& spec, std::size_t K) {
  if (spec.empty()) return deterministic_start<Real>(K, K);
  const auto parts = split_csv(spec);
  if (parts.size() == 1 && spec.find_first_not_of("0123456789") == std::string::npos) {
    return deterministic_start<Real>(K, std::stoul(spec));
  }
  StartDistribution<Real> s;
  for (const auto& p : parts) {
    const auto slash = p.find('/');
    if (slash != std::string::npos) {
      s.push_back(Real(p.substr(0, slash)) / Real(p.substr(slash + 1)));
    } else {
      s.push_back(Real(p));
    }
  }
  // decimals in a CSV rarely sum to 1 exactly in binary; renormalize tiny drift
  Real sum = 0;
  for (const auto& v : s) sum += v;
  if (abs(sum - 1) <= Real("1e-12")) {
    for (auto& v : s) v /= sum;
  }
  validate_start(s, K);
  return s;
}

// Closed-form probabilities against the exact chain in the same labeling.
json discrepancy_notes(const ProblemSpec& spec, const PaperAnalyticProvider<Real>& analytic) {
  const LabeledExactProvider<Real> exact(spec, analytic.labels());
  const std::size_t K = analytic.K();
  json notes = json::array();
  std::size_t checked = 0, violated = 0;
  auto note = [&](const std::string& quantity, std::size_t i, std::size_t l, const Real& closed,
                  const Real& truth, bool sound) {
    ++checked;
    if (sound) return;
    ++violated;
    if (notes.size() < 200) {
      notes.push_back({{"quantity", quantity},
                       {"i", i},
                       {"l", l},
                       {"closed_form", number(closed)},
                       {"exact", number(truth)}});
    }
  };
  const bool upper = analytic.supports(Direction::upper);
  for (std::size_t i = 1; i <= K; ++i) {
    {
      const Real c = analytic.escape_max(i), e = exact.escape_max(i);
      note("escape_max", i, i, c, e, le_with_slack(e, c, 1e-40));
    }
    if (upper) {
      const Real c = analytic.escape_min(i), e = exact.escape_min(i);
      note("escape_min", i, i, c, e, le_with_slack(c, e, 1e-40));
    }
    for (std::size_t l = 1; l < i; ++l) {
      {
        const Real c = analytic.skip_max(i, l), e = exact.skip_max(i, l);
        note("skip_max", i, l, c, e, le_with_slack(e, c, 1e-40));
      }
      {
        const Real c = analytic.reach_min(i, l), e = exact.reach_min(i, l);
        note("reach_min", i, l, c, e, le_with_slack(c, e, 1e-40));
      }
      if (upper) {
        const Real c1 = analytic.skip_min(i, l), e1 = exact.skip_min(i, l);
        note("skip_min", i, l, c1, e1, le_with_slack(c1, e1, 1e-40));
        const Real c2 = analytic.reach_max(i, l), e2 = exact.reach_max(i, l);
        note("reach_max", i, l, c2, e2, le_with_slack(e2, c2, 1e-40));
      }
    }
  }
  json labels = json::array();
  for (const auto& l : analytic.labels()) labels.push_back(l);
  return json{{"labels", labels},
              {"checked", checked},
              {"violations", violated},
              {"notes", notes},
              {"notes_truncated", violated > notes.size()}};
}

json paper_analytic_json(const ProblemSpec& spec) {
  const PaperAnalyticProvider<Real> analytic(spec.function, spec.n);
  json out{{"K", analytic.K()}};
  for (Direction dir : {Direction::lower, Direction::upper}) {
    if (!analytic.supports(dir)) {
      out[std::string(to_string(dir))] = nullptr;
      continue;
    }
    const auto c = coeff_ratio<Real>(analytic, dir, MethodId::paper_analytic);
    const auto d = assemble_bound<Real>(analytic, c, dir);
    json curve = json::array();
    for (std::size_t l = 1; l < analytic.K(); ++l) curve.push_back(number(c.at(analytic.K(), l)));
    out[std::string(to_string(dir))] = series_json(d, &c);
    out[std::string(to_string(dir))]["coefficients_at_K"] = curve;
  }
  out["discrepancies"] = discrepancy_notes(spec, analytic);
  return out;
}

struct AnalyzeArgs {
  Common common;
  std::string methods;
  std::string subdigraph = "none";
  double epsilon = 0;
  std::string start;
};

int cmd_analyze(const AnalyzeArgs& a, unsigned bits) {
  const FunctionKind f = function_arg(a.common.function);
  const ProblemSpec spec = ProblemSpec::make(f, a.common.n);

  std::vector<MethodId> methods;
  bool want_analytic = false;
  if (a.methods.empty()) {
    for (MethodId m : kAllMethods) methods.push_back(m);
  } else {
    for (const auto& name : split_csv(a.methods)) {
      const auto m = parse_method(name);
      if (!m) throw ArgumentError("unknown method '" + name + "'");
      methods.push_back(*m);
    }
  }
  for (MethodId m : methods) want_analytic = want_analytic || m == MethodId::paper_analytic;

  if (a.subdigraph != "none" && a.subdigraph != "preset") {
    throw ArgumentError("--subdigraph must be 'preset' or 'none'");
  }
  const double eps = a.epsilon > 0 ? a.epsilon : 1.0 / spec.n;
  if (!(eps > 0 && eps < 1)) throw ArgumentError("--epsilon must lie in (0,1)");

  json report;
  report["function"] = std::string(to_string(f));
  report["n"] = spec.n;

  const LevelPartition full_partition = build_partition(spec);
  const LevelKernel<Real> full_kernel = build_kernel<Real>(spec, full_partition);
  std::unique_ptr<SubDigraph<Real>> sub;
  if (a.subdigraph == "preset") {
    sub = std::make_unique<SubDigraph<Real>>(build_subdigraph<Real>(spec, preset_subset(f, spec.n)));
  }
  const LevelKernel<Real>& kernel = sub ? sub->kernel : full_kernel;
  report["partition"] = partition_json(kernel.partition());
  if (sub) {
    report["subdigraph"] = {{"preset", true},
                            {"source_levels", sub->source_levels},
                            {"warnings", sub->warnings}};
  } else {
    report["subdigraph"] = nullptr;
  }
  report["shortcuts"] = shortcuts_json(detect_shortcuts(kernel, Real(eps)));

  const auto start = parse_start(a.start, kernel.K());
  BoundReport<Real> sandwich;
  sandwich.K = kernel.K();
  json bounds = json::array();
  for (MethodId m : methods) {
    if (m == MethodId::paper_analytic) continue;
    const auto c = compute_coefficients<Real>(kernel, m, start);
    sandwich.series.push_back(assemble_bound(kernel, c, c.direction));
    bounds.push_back(series_json(sandwich.series.back(), &c));
  }
  report["bounds"] = bounds;

  const auto level = exact_level_hitting(kernel);
  json oracle{{"level_chain", oracle_json(level)}, {"full_state", nullptr}};
  if (!sub && spec.n <= kFullStateMaxN) {
    oracle["full_state"] = oracle_json(exact_full_hitting<Real>(spec));
  }
  if (sub) {
    // m'_k <= m_k against the original chain
    const auto full_level = exact_level_hitting(full_kernel);
    json cmp = json::array();
    for (std::size_t k = 1; k <= kernel.K(); ++k) {
      const std::size_t src = sub->source_levels[k];
      cmp.push_back({{"k", k},
                     {"source_level", src},
                     {"m_sub", number(level.m[k])},
                     {"m_full", number(full_level.m[src])},
                     {"holds", le_with_slack(level.m[k], full_level.m[src], 1e-9)}});
    }
    oracle["subdigraph_vs_full"] = cmp;
  }
  report["oracle"] = oracle;

  sandwich.oracle = level;
  report["sandwich_violations"] = sandwich.sandwich_violations(1e-9);

  report["paper_analytic"] = want_analytic ? paper_analytic_json(spec) : json(nullptr);

  json params{{"function", a.common.function}, {"n", spec.n},      {"methods", a.methods},
              {"subdigraph", a.subdigraph},    {"epsilon", eps},   {"start", a.start}};
  report["manifest"] = manifest("analyze", params, bits);
  emit(a.common.out, report.dump(2) + "\n");
  return 0;
}

struct CoefficientsArgs {
  Common common;
  std::string method;
  int k = 0;
  std::string subdigraph = "none";
};

std::string csv_value(const Real& v) {
  if (v == 0) return "0";
  return v.str(17, std::ios_base::fmtflags(0));
}

std::string csv_log(const Real& v) {
  if (v == 0) return "-inf";
  return log_of(v).str(17, std::ios_base::fmtflags(0));
}

int cmd_coefficients(const CoefficientsArgs& a, unsigned) {
  const FunctionKind f = function_arg(a.common.function);
  const ProblemSpec spec = ProblemSpec::make(f, a.common.n);
  const auto method = parse_method(a.method);
  if (!method) throw ArgumentError("unknown method '" + a.method + "'");

  CoefficientTable<Real> table;
  if (*method == MethodId::paper_analytic) {
    const PaperAnalyticProvider<Real> analytic(f, spec.n);
    table = coeff_ratio<Real>(analytic, Direction::lower, MethodId::paper_analytic);
  } else if (a.subdigraph == "preset") {
    const auto sub = build_subdigraph<Real>(spec, preset_subset(f, spec.n));
    table = compute_coefficients<Real>(sub.kernel, *method);
  } else if (a.subdigraph == "none") {
    const auto kernel = build_kernel<Real>(spec, build_partition(spec));
    table = compute_coefficients<Real>(kernel, *method);
  } else {
    throw ArgumentError("--subdigraph must be 'preset' or 'none'");
  }
  const std::size_t k = a.k > 0 ? static_cast<std::size_t>(a.k) : table.K;
  if (k > table.K) throw ArgumentError("--k exceeds K = " + std::to_string(table.K));

  std::string csv = "k,ell,method,value,log_value\n";
  for (std::size_t l = 1; l < k; ++l) {
    const Real v = table.at(k, l);
    csv += std::to_string(k) + "," + std::to_string(l) + "," + std::string(to_string(*method)) +
           "," + csv_value(v) + "," + csv_log(v) + "\n";
  }
  emit(a.common.out, csv);
  return 0;
}

struct DigraphArgs {
  Common common;
  std::string subdigraph = "none";
  bool annotate = false;
  double epsilon = 0;
};

int cmd_digraph(const DigraphArgs& a, unsigned) {
  const FunctionKind f = function_arg(a.common.function);
  const ProblemSpec spec = ProblemSpec::make(f, a.common.n);
  std::unique_ptr<SubDigraph<Real>> sub;
  if (a.subdigraph == "preset") {
    sub = std::make_unique<SubDigraph<Real>>(build_subdigraph<Real>(spec, preset_subset(f, spec.n)));
  } else if (a.subdigraph != "none") {
    throw ArgumentError("--subdigraph must be 'preset' or 'none'");
  }
  const LevelKernel<Real> full = sub ? sub->kernel : build_kernel<Real>(spec, build_partition(spec));
  LevelDigraph graph = build_digraph(full);
  if (a.annotate) {
    const double eps = a.epsilon > 0 ? a.epsilon : 1.0 / spec.n;
    annotate_shortcuts(graph, detect_shortcuts(full, Real(eps)));
  }
  DotOptions opts;
  opts.annotate_shortcuts = a.annotate;
  opts.graph_name = std::string(to_string(f)) + "_n" + std::to_string(spec.n);
  emit(a.common.out, to_dot(graph, opts));
  return 0;
}

struct OracleArgs {
  Common common;
  std::string mode = "both";
  bool exact = false;
};

template <class T>
json run_oracle(const ProblemSpec& spec, const std::string& mode) {
  json out{{"level_chain", nullptr}, {"full_state", nullptr}};
  std::optional<OracleResult<T>> level, full;
  if (mode == "level" || mode == "both") {
    level = exact_level_hitting(build_kernel<T>(spec, build_partition(spec)));
    out["level_chain"] = oracle_json(*level);
  }
  if (mode == "full" || mode == "both") {
    full = exact_full_hitting<T>(spec);
    out["full_state"] = oracle_json(*full);
  }
  if (level && full) {
    Real worst = 0;
    for (std::size_t k = 0; k < level->m.size(); ++k) {
      const Real g = relative_gap(level->m[k], full->m[k]);
      if (g > worst) worst = g;
    }
    out["max_relative_gap"] = number(worst);
  }
  return out;
}

int cmd_oracle(const OracleArgs& a, unsigned bits) {
  const FunctionKind f = function_arg(a.common.function);
  const ProblemSpec spec = ProblemSpec::make(f, a.common.n);
  if (a.mode != "level" && a.mode != "full" && a.mode != "both") {
    throw ArgumentError("--mode must be level, full or both");
  }
  json report = a.exact ? run_oracle<Rational>(spec, a.mode) : run_oracle<Real>(spec, a.mode);
  report["function"] = std::string(to_string(f));
  report["n"] = spec.n;
  report["exact"] = a.exact;
  report["wht_isa"] = std::string(simd::to_string(simd::active_isa()));
  report["manifest"] = manifest(
      "oracle", {{"function", a.common.function}, {"n", spec.n}, {"mode", a.mode}, {"exact", a.exact}},
      bits);
  emit(a.common.out, report.dump(2) + "\n");
  return 0;
}

struct SimulateArgs {
  Common common;
  std::size_t start = 0;
  bool start_set = false;
  std::uint64_t trials = 1000;
  std::uint64_t seed = 1;
  std::uint64_t max_generations = 0;
};

int cmd_simulate(const SimulateArgs& a, unsigned bits) {
  const FunctionKind f = function_arg(a.common.function);
  SimulationConfig cfg;
  cfg.spec = ProblemSpec::make(f, a.common.n);
  const std::size_t K = build_partition(cfg.spec).K();
  cfg.start_level = a.start_set ? a.start : K;
  cfg.trials = a.trials;
  cfg.seed = a.seed;
  cfg.max_generations = a.max_generations;
  const auto r = run_trials(cfg);

  json report{{"function", std::string(to_string(f))},
              {"n", cfg.spec.n},
              {"start_level", cfg.start_level},
              {"trials", cfg.trials},
              {"max_generations", r.max_generations},
              {"uncensored", r.uncensored},
              {"censored_fraction", r.censored_fraction},
              {"unreliable", r.unreliable},
              {"mean", r.mean},
              {"stddev", r.stddev},
              {"stderr", r.stderr_mean},
              {"visit_frequency", r.visit_frequency},
              {"hitting_times", r.hitting_times},
              {"censored", r.censored},
              {"generator", r.generator}};
  report["manifest"] = manifest("simulate",
                                {{"function", a.common.function},
                                 {"n", cfg.spec.n},
                                 {"start", cfg.start_level},
                                 {"trials", cfg.trials},
                                 {"seed", cfg.seed},
                                 {"max_generations", r.max_generations}},
                                bits, cfg.seed);
  emit(a.common.out, report.dump(2) + "\n");
  return 0;
}

struct AppendixArgs {
  std::string C = "2.718281828459045";
  std::string n_list = "10,100,1000";
  std::string out;
};

int cmd_verify_appendix(const AppendixArgs& a, unsigned bits) {
  Real C;
  try {
    C = Real(a.C);
  } catch (const std::exception&) {
    throw ArgumentError("--C must be a positive number");
  }
  json rows = json::array();
  bool all = true;
  for (const auto& item : split_csv(a.n_list)) {
    int n = 0;
    try {
      n = std::stoi(item);
    } catch (const std::exception&) {
      throw ArgumentError("--n-list must be comma-separated integers");
    }
    const auto r = appendix_products(C, n);
    all = all && r.pass1() && r.pass2();
    rows.push_back({{"n", n},
                    {"product1", number(r.product1)},
                    {"floor1", r.floor1 ? number(*r.floor1) : json(nullptr)},
                    {"pass1", r.floor1 ? json(r.pass1()) : json(nullptr)},
                    {"product2", number(r.product2)},
                    {"floor2", number(r.floor2)},
                    {"pass2", r.pass2()}});
  }
  json report{{"C", number(C)}, {"rows", rows}, {"all_pass", all}};
  report["manifest"] = manifest("verify-appendix", {{"C", a.C}, {"n_list", a.n_list}}, bits);
  emit(a.out, report.dump(2) + "\n");
  return 0;
}

void add_common(CLI::App* sub, Common& c, bool needs_function = true) {
  if (needs_function) {
    sub->add_option("--function", c.function, "onemax|fullydeceptive|twomax1|deceptive")->required();
    sub->add_option("--n", c.n, "bit-string length")->required();
  }
  sub->add_option("--precision", c.precision, "working precision in bits");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fitness-level hitting-time bounds for the (1+1) EA"};
  app.require_subcommand(1);
  app.set_version_flag("--version", LEVELBOUND_VERSION);

  AnalyzeArgs analyze;
  auto* a = app.add_subcommand("analyze", "bounds, shortcuts and oracles as JSON");
  add_common(a, analyze.common);
  a->add_option("--methods", analyze.methods, "comma-separated method names (default: all)");
  a->add_option("--subdigraph", analyze.subdigraph, "preset|none");
  a->add_option("--epsilon", analyze.epsilon, "shortcut threshold (default 1/n)");
  a->add_option("--start", analyze.start, "start level, or CSV law over levels 0..K");
  a->add_option("--out", analyze.common.out, "output path (default stdout)");

  CoefficientsArgs coeffs;
  auto* c = app.add_subcommand("coefficients", "coefficient row c(k, 1..k-1) as CSV");
  add_common(c, coeffs.common);
  c->add_option("--method", coeffs.method, "method name")->required();
  c->add_option("--k", coeffs.k, "row (default K)");
  c->add_option("--subdigraph", coeffs.subdigraph, "preset|none");
  c->add_option("--csv", coeffs.common.out, "output path (default stdout)");

  DigraphArgs digraph;
  auto* d = app.add_subcommand("digraph", "level digraph as DOT");
  add_common(d, digraph.common);
  d->add_option("--subdigraph", digraph.subdigraph, "preset|none");
  d->add_flag("--annotate-shortcuts", digraph.annotate, "color shortcut arcs red");
  d->add_option("--epsilon", digraph.epsilon, "shortcut threshold (default 1/n)");
  d->add_option("--dot", digraph.common.out, "output path (default stdout)");

  OracleArgs oracle;
  auto* o = app.add_subcommand("oracle", "exact mean hitting times as JSON");
  add_common(o, oracle.common);
  o->add_option("--mode", oracle.mode, "level|full|both");
  o->add_flag("--exact", oracle.exact, "rational arithmetic");
  o->add_option("--out", oracle.common.out, "output path (default stdout)");

  SimulateArgs sim;
  auto* s = app.add_subcommand("simulate", "Monte Carlo runs as JSON");
  add_common(s, sim.common);
  s->add_option("--start", sim.start, "start level (default K)");
  s->add_option("--trials", sim.trials, "number of trials")->check(CLI::PositiveNumber);
  s->add_option("--seed", sim.seed, "64-bit seed");
  s->add_option("--max-generations", sim.max_generations, "censoring cap (default 1e4 n ln(n+1))");
  s->add_option("--out", sim.common.out, "output path (default stdout)");

  AppendixArgs appendix;
  Common appendix_common;
  auto* v = app.add_subcommand("verify-appendix", "product inequalities as JSON");
  add_common(v, appendix_common, false);
  v->add_option("--C", appendix.C, "positive constant");
  v->add_option("--n-list", appendix.n_list, "comma-separated n values");
  v->add_option("--out", appendix.out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }
  sim.start_set = s->count("--start") > 0;

  unsigned requested = precision_bits_from_env();
  for (const Common* cm : {&analyze.common, &coeffs.common, &digraph.common, &oracle.common,
                           &sim.common, &appendix_common}) {
    if (cm->precision != 0) requested = cm->precision;
  }
  if (requested < 16) {
    std::cerr << "error: --precision must be at least 16 bits\n";
    return kExitUsage;
  }
  PrecisionScope precision(requested);
  const unsigned bits = precision.effective_bits();

  try {
    if (a->parsed()) return cmd_analyze(analyze, bits);
    if (c->parsed()) return cmd_coefficients(coeffs, bits);
    if (d->parsed()) return cmd_digraph(digraph, bits);
    if (o->parsed()) return cmd_oracle(oracle, bits);
    if (s->parsed()) return cmd_simulate(sim, bits);
    if (v->parsed()) return cmd_verify_appendix(appendix, bits);
  } catch (const GuardError& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return kExitGuard;
  } catch (const ArgumentError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitUsage;
}
