#include "levelbound/digraph.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace levelbound {

bool LevelDigraph::has_arc(std::size_t from, std::size_t to) const {
  for (const auto& a : arcs) {
    if (a.from == from && a.to == to) return true;
  }
  return false;
}

std::vector<std::size_t> LevelDigraph::successors(std::size_t from) const {
  std::vector<std::size_t> out;
  for (const auto& a : arcs) {
    if (a.from == from) out.push_back(a.to);
  }
  return out;
}

template <class T>
LevelDigraph build_digraph(const LevelKernel<T>& kernel) {
  LevelDigraph g;
  const auto& partition = kernel.partition();
  g.kind = partition.kind;
  for (std::size_t k = 0; k <= kernel.K(); ++k) {
    g.vertices.push_back(DigraphVertex{k, partition.levels[k].weights, partition.levels[k].fitness});
  }
  for (std::size_t k = 1; k <= kernel.K(); ++k) {
    for (std::size_t l = 0; l < k; ++l) {
      if (kernel.p_min(k, l) > 0) g.arcs.push_back(DigraphArc{k, l, to_real(kernel.p_min(k, l))});
    }
  }
  return g;
}

namespace {

std::string join_weights(const std::vector<int>& ws) {
  std::string out;
  for (std::size_t i = 0; i < ws.size(); ++i) {
    if (i != 0) out += ",";
    out += std::to_string(ws[i]);
  }
  return out;
}

std::string sci3(const Real& v) {
  // %.2e keeps three significant digits; Real may be far outside double range
  double d = v.convert_to<double>();
  if (d != 0 && std::isfinite(d) && std::abs(d) >= 1e-300) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2e", d);
    return buf;
  }
  return v.str(3, std::ios_base::scientific);
}

}  // namespace

std::string to_dot(const LevelDigraph& graph, const DotOptions& options) {
  const bool primed = graph.kind == PartitionKind::level_partition;
  const std::string prefix = primed ? "S'_" : "S_";
  std::ostringstream out;
  out << "digraph " << options.graph_name << " {\n";
  out << "  rankdir=LR;\n";
  for (const auto& v : graph.vertices) {
    out << "  L" << v.level << " [label=\"" << prefix << v.level;
    if (primed && v.level == 0) {
      out << " [rest]";
    } else {
      out << " [w=" << join_weights(v.weights) << ", f=" << v.fitness.str() << "]";
    }
    out << "\"";
    if (v.level == 0) out << ", shape=doublecircle";
    out << "];\n";
  }
  for (const auto& a : graph.arcs) {
    out << "  L" << a.from << " -> L" << a.to << " [label=\"" << sci3(a.probability) << "\"";
    if (options.annotate_shortcuts && (a.weak_shortcut || a.strong_shortcut)) out << ", color=red";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

template LevelDigraph build_digraph<Real>(const LevelKernel<Real>&);
template LevelDigraph build_digraph<Rational>(const LevelKernel<Rational>&);

}  // namespace levelbound
