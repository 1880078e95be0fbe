#pragma once

#include "levelbound/kernel.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace levelbound {

struct DigraphVertex {
  std::size_t level;
  std::vector<int> weights;
  Rational fitness;
};

struct DigraphArc {
  std::size_t from;
  std::size_t to;
  Real probability;  // p_min(from, to)
  bool weak_shortcut = false;
  bool strong_shortcut = false;
};

/// Vertices are levels, arcs the strictly upward transitions with
/// p_min > 0. Self-loops are not arcs.
struct LevelDigraph {
  PartitionKind kind = PartitionKind::fitness_partition;
  std::vector<DigraphVertex> vertices;
  std::vector<DigraphArc> arcs;

  bool has_arc(std::size_t from, std::size_t to) const;
  std::vector<std::size_t> successors(std::size_t from) const;
};

template <class T>
LevelDigraph build_digraph(const LevelKernel<T>& kernel);

struct DotOptions {
  bool annotate_shortcuts = false;
  std::string graph_name = "levels";
};

/// Graphviz rendering: nodes `S_k [w=..., f=...]` (primed for level
/// partitions), arcs labeled with their probability in 3-digit scientific
/// notation, shortcut arcs red when annotation is on.
std::string to_dot(const LevelDigraph& graph, const DotOptions& options = {});

}  // namespace levelbound
