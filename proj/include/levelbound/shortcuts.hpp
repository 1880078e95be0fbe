#pragma once

#include "levelbound/digraph.hpp"
#include "levelbound/kernel.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace levelbound {

enum class ShortcutClass { none, weak_only, strong };

std::string_view to_string(ShortcutClass c);

struct ShortcutPair {
  std::size_t k;
  std::size_t l;
  Real ratio;
};

/// weak: p(k,l) / p(k,[0,l]) <= epsilon with p(k,[0,l]) > 0, for 1 <= l < k.
/// strong: p(k,[l,k-1]) / p(k,[0,k-1]) <= epsilon, for 1 <= l < k.
struct ShortcutReport {
  std::vector<ShortcutPair> weak;
  std::vector<ShortcutPair> strong;
  ShortcutClass classification = ShortcutClass::none;
  Real epsilon;

  bool has_weak(std::size_t k, std::size_t l) const;
  bool has_strong(std::size_t k, std::size_t l) const;
};

/// Requires an exact kernel and epsilon in (0,1).
template <class T>
ShortcutReport detect_shortcuts(const LevelKernel<T>& kernel, const Real& epsilon);

/// Flags the arcs k -> j with j < l for every shortcut pair (k, l).
void annotate_shortcuts(LevelDigraph& graph, const ShortcutReport& report);

/// Retained weight classes for a level partition, in the order they should
/// become S'_1, S'_2, ...
struct SubDigraphSpec {
  std::vector<int> retained;
  std::vector<std::string> warnings;
};

/// twomax1: weights n-1 .. n/2, then n/2 - 1.
/// deceptive: weights n, n-1, ..., n/2+1, then n/2 (which has higher
/// fitness than the rest; a warning says so).
SubDigraphSpec preset_subset(FunctionKind function, int n);

template <class T>
struct SubDigraph {
  LevelPartition partition;
  LevelKernel<T> kernel;
  /// Original fitness-partition level of each retained level (index 1..K').
  std::vector<std::size_t> source_levels;
  std::vector<std::string> warnings;
};

/// Builds the absorbing chain on the retained levels. Retained classes are
/// stably sorted by descending fitness first, since an accepted move into a
/// later-listed level would break the triangular level order; each move
/// is reported as a warning.
template <class T>
SubDigraph<T> build_subdigraph(const ProblemSpec& spec, const SubDigraphSpec& subset);

}  // namespace levelbound
