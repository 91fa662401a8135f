#pragma once

#include <vector>

#include "mds/depgraph.hpp"
#include "mds/system.hpp"

namespace mds {

// Why a component cannot obstruct the fixed-point property — or that it does.
enum class ComponentStatus { LoopNumberOne, LoopNumberZero, ReachesZero, Obstructs };

// The per-vertex criteria: a vertex is harmless iff it admits two closed
// walks with lengths differing by one, or reaches a zero, or lies on no
// closed walk at all.
enum class VertexCriterion { TwoClosedWalksDifferByOne, WalkToZero, NoClosedWalk, Fails };

inline const char* to_string(ComponentStatus s) {
  switch (s) {
    case ComponentStatus::LoopNumberOne: return "LoopNumberOne";
    case ComponentStatus::LoopNumberZero: return "LoopNumberZero";
    case ComponentStatus::ReachesZero: return "ReachesZero";
    case ComponentStatus::Obstructs: return "Obstructs";
  }
  return "?";
}

inline const char* to_string(VertexCriterion c) {
  switch (c) {
    case VertexCriterion::TwoClosedWalksDifferByOne: return "TwoClosedWalksDifferByOne";
    case VertexCriterion::WalkToZero: return "WalkToZero";
    case VertexCriterion::NoClosedWalk: return "NoClosedWalk";
    case VertexCriterion::Fails: return "Fails";
  }
  return "?";
}

struct ComponentVerdict {
  int component_id = 0;
  ComponentStatus status = ComponentStatus::LoopNumberZero;
  int loop_number = 0;
};

struct SystemVerdict {
  bool is_fixed_point_system = false;
  std::vector<ComponentVerdict> component_verdicts;
  std::vector<VertexCriterion> vertex_criteria;  // indexed by vertex
};

// Polynomial-time decision: f is a fixed point system iff every strongly
// connected component has loop number <= 1 or reaches a zero.
inline SystemVerdict classify(const MonomialSystem& f, const DependencyGraph& g,
                              const SccDecomposition& d) {
  (void)g;
  SystemVerdict out;
  out.is_fixed_point_system = true;
  out.vertex_criteria.assign(f.n, VertexCriterion::Fails);
  for (int c = 0; c < static_cast<int>(d.components.size()); ++c) {
    const SccInfo& info = d.components[c];
    ComponentStatus status;
    VertexCriterion tag;
    if (info.loop_number == 1) {
      status = ComponentStatus::LoopNumberOne;
      tag = VertexCriterion::TwoClosedWalksDifferByOne;
    } else if (info.reaches_zero) {
      status = info.loop_number == 0 ? ComponentStatus::LoopNumberZero
                                     : ComponentStatus::ReachesZero;
      tag = VertexCriterion::WalkToZero;
    } else if (info.loop_number == 0) {
      status = ComponentStatus::LoopNumberZero;
      tag = VertexCriterion::NoClosedWalk;
    } else {
      status = ComponentStatus::Obstructs;
      tag = VertexCriterion::Fails;
      out.is_fixed_point_system = false;
    }
    out.component_verdicts.push_back({c, status, info.loop_number});
    for (int v : info.vertices) out.vertex_criteria[v] = tag;
  }
  return out;
}

inline SystemVerdict classify(const MonomialSystem& f) {
  const DependencyGraph g = build_dependency_graph(f);
  return classify(f, g, strongly_connected_components(g));
}

// Triangular: every f_i depends only on x_1..x_i. Always a fixed point
// system (each component of the dependency graph is a single vertex).
inline bool classify_triangular(const MonomialSystem& f) {
  check_system(f);
  for (int i = 0; i < f.n; ++i)
    if (f.components[i].support & ~full_mask(i + 1)) return false;
  return true;
}

}  // namespace mds
