#include "levelbound/shortcuts.hpp"

#include "levelbound/errors.hpp"

#include <algorithm>
#include <string>

namespace levelbound {

std::string_view to_string(ShortcutClass c) {
  switch (c) {
    case ShortcutClass::none: return "none";
    case ShortcutClass::weak_only: return "weak_only";
    case ShortcutClass::strong: return "strong";
  }
  return "unknown";
}

namespace {

bool contains(const std::vector<ShortcutPair>& pairs, std::size_t k, std::size_t l) {
  return std::any_of(pairs.begin(), pairs.end(),
                     [&](const ShortcutPair& p) { return p.k == k && p.l == l; });
}

}  // namespace

bool ShortcutReport::has_weak(std::size_t k, std::size_t l) const { return contains(weak, k, l); }
bool ShortcutReport::has_strong(std::size_t k, std::size_t l) const {
  return contains(strong, k, l);
}

template <class T>
ShortcutReport detect_shortcuts(const LevelKernel<T>& kernel, const Real& epsilon) {
  if (!kernel.exact()) throw ArgumentError("shortcut detection needs an exact kernel");
  if (!(epsilon > 0 && epsilon < 1)) throw ArgumentError("epsilon must lie in (0,1)");
  ShortcutReport report;
  report.epsilon = epsilon;
  for (std::size_t k = 2; k <= kernel.K(); ++k) {
    const T& escape = kernel.escape_min(k);
    for (std::size_t l = 1; l < k; ++l) {
      const T& below = kernel.skip_min(k, l + 1);
      if (below > 0) {
        Real ratio = to_real(T(kernel.p_min(k, l) / below));
        if (ratio <= epsilon) report.weak.push_back({k, l, ratio});
      }
      if (escape > 0) {
        Real ratio = to_real(T(kernel.reach_min(k, l) / escape));
        if (ratio <= epsilon) report.strong.push_back({k, l, ratio});
      }
    }
  }
  if (!report.strong.empty()) {
    report.classification = ShortcutClass::strong;
  } else if (!report.weak.empty()) {
    report.classification = ShortcutClass::weak_only;
  }
  return report;
}

void annotate_shortcuts(LevelDigraph& graph, const ShortcutReport& report) {
  for (auto& arc : graph.arcs) {
    for (const auto& p : report.weak) {
      if (arc.from == p.k && arc.to < p.l) arc.weak_shortcut = true;
    }
    for (const auto& p : report.strong) {
      if (arc.from == p.k && arc.to < p.l) arc.strong_shortcut = true;
    }
  }
}

SubDigraphSpec preset_subset(FunctionKind function, int n) {
  const ProblemSpec spec = ProblemSpec::make(function, n);
  const int h = n / 2;
  SubDigraphSpec out;
  switch (function) {
    case FunctionKind::twomax1:
      for (int w = n - 1; w >= h; --w) out.retained.push_back(w);
      out.retained.push_back(h - 1);
      break;
    case FunctionKind::deceptive:
      for (int w = n; w > h; --w) out.retained.push_back(w);
      out.retained.push_back(h);
      break;
    default:
      throw ArgumentError("no preset sub-digraph for " + std::string(to_string(function)));
  }
  for (std::size_t i = 1; i < out.retained.size(); ++i) {
    if (!(spec.fitness(out.retained[i]) < spec.fitness(out.retained[i - 1]))) {
      out.warnings.push_back("preset level " + std::to_string(i + 1) + " (w=" +
                             std::to_string(out.retained[i]) + ", f=" +
                             spec.fitness(out.retained[i]).str() +
                             ") does not have lower fitness than its predecessor");
    }
  }
  return out;
}

template <class T>
SubDigraph<T> build_subdigraph(const ProblemSpec& spec, const SubDigraphSpec& subset) {
  std::vector<int> order = subset.retained;
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return spec.fitness(a) > spec.fitness(b); });
  std::vector<std::string> warnings = subset.warnings;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (order[i] != subset.retained[i]) {
      warnings.push_back("retained levels reordered by descending fitness; w=" +
                         std::to_string(order[i]) + " is now S'_" + std::to_string(i + 1));
    }
  }
  LevelPartition partition = make_level_partition(spec, order);
  for (const auto& w : partition.warnings) warnings.push_back(w);
  LevelKernel<T> kernel = build_kernel<T>(spec, partition);

  const LevelPartition full = build_partition(spec);
  std::vector<std::size_t> source(order.size() + 1, 0);
  for (std::size_t i = 0; i < order.size(); ++i) source[i + 1] = full.level_of_weight(order[i]);
  return SubDigraph<T>{std::move(partition), std::move(kernel), std::move(source),
                       std::move(warnings)};
}

template ShortcutReport detect_shortcuts<Real>(const LevelKernel<Real>&, const Real&);
template ShortcutReport detect_shortcuts<Rational>(const LevelKernel<Rational>&, const Real&);
template SubDigraph<Real> build_subdigraph<Real>(const ProblemSpec&, const SubDigraphSpec&);
template SubDigraph<Rational> build_subdigraph<Rational>(const ProblemSpec&, const SubDigraphSpec&);

}  // namespace levelbound
