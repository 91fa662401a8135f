#pragma once

#include <string>

#include "mds/depgraph.hpp"
#include "mds/dynamics.hpp"

namespace mds {

// Graphviz rendering of the dependency graph: one cluster per strongly
// connected component annotated with its loop number; the sink node "eps"
// appears only when the system has zero components.
inline std::string dependency_graph_dot(const DependencyGraph& g,
                                        const SccDecomposition& d) {
  std::string out = "digraph dependency {\n";
  for (std::size_t c = 0; c < d.components.size(); ++c) {
    const SccInfo& info = d.components[c];
    out += "  subgraph cluster_" + std::to_string(c) + " {\n";
    out += "    label=\"t=" + std::to_string(info.loop_number) + "\";\n";
    for (int v : info.vertices) out += "    a" + std::to_string(v + 1) + ";\n";
    out += "  }\n";
  }
  if (g.zeros) out += "  eps;\n";
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j)
      if ((g.adj[i] >> j) & 1)
        out += "  a" + std::to_string(i + 1) + " -> a" + std::to_string(j + 1) + ";\n";
  for (int i = 0; i < g.n; ++i)
    if ((g.zeros >> i) & 1) out += "  a" + std::to_string(i + 1) + " -> eps;\n";
  out += "}\n";
  return out;
}

inline std::string dependency_graph_dot(const DependencyGraph& g) {
  return dependency_graph_dot(g, strongly_connected_components(g));
}

// State space as a functional graph, states labeled by their binary string
// (x1 leftmost). Readability caps this at 12 variables.
inline std::string state_space_dot(const StateSpace& space, int limit = 12) {
  if (space.n > limit)
    throw limit_error("dimension " + std::to_string(space.n) +
                      " exceeds the state-space export limit " + std::to_string(limit));
  std::string out = "digraph statespace {\n";
  const std::uint64_t size = space.successor.size();
  for (std::uint64_t s = 0; s < size; ++s)
    out += "  s" + std::to_string(s) + " [label=\"" +
           to_string(State{space.n, s}) + "\"];\n";
  for (std::uint64_t s = 0; s < size; ++s)
    out += "  s" + std::to_string(s) + " -> s" + std::to_string(space.successor[s]) +
           ";\n";
  out += "}\n";
  return out;
}

}  // namespace mds
