#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "mds/errors.hpp"
#include "mds/system.hpp"

namespace mds {

// Digraph on vertices a_1..a_n plus an implicit sink for zero components.
// Row i of the adjacency matrix is exactly the support of f_i, so the
// system can be reconstructed from the graph.
struct DependencyGraph {
  int n = 0;
  std::vector<std::uint64_t> adj;  // adj[i] bit j: edge a_{i+1} -> a_{j+1}
  std::uint64_t zeros = 0;         // bit i: f_{i+1} = 0 (edge to the sink)

  friend bool operator==(const DependencyGraph&, const DependencyGraph&) = default;
};

inline DependencyGraph build_dependency_graph(const MonomialSystem& f) {
  check_system(f);
  DependencyGraph g{f.n, std::vector<std::uint64_t>(f.n, 0), 0};
  for (int i = 0; i < f.n; ++i) {
    const Monomial& m = f.components[i];
    if (m.alpha)
      g.adj[i] = m.support;
    else
      g.zeros |= std::uint64_t{1} << i;
  }
  return g;
}

inline MonomialSystem reconstruct_system(const DependencyGraph& g) {
  if (g.n < 1 || g.n > kMaxDimension || static_cast<int>(g.adj.size()) != g.n)
    throw std::invalid_argument("malformed dependency graph");
  MonomialSystem f{g.n, {}};
  f.components.reserve(g.n);
  for (int i = 0; i < g.n; ++i) {
    if (g.adj[i] & ~full_mask(g.n))
      throw std::invalid_argument("adjacency bit out of range");
    if ((g.zeros >> i) & 1) {
      if (g.adj[i] != 0)
        throw std::invalid_argument("zero vertex a" + std::to_string(i + 1) +
                                    " has outgoing edges");
      f.components.push_back(Monomial::zero());
    } else {
      f.components.push_back(Monomial{true, g.adj[i]});
    }
  }
  return f;
}

namespace detail {

// OR of the rows selected by mask: one step of Boolean matrix application.
inline std::uint64_t gather_rows(const std::vector<std::uint64_t>& rows,
                                 std::uint64_t mask) {
  std::uint64_t out = 0;
  while (mask) {
    out |= rows[std::countr_zero(mask)];
    mask &= mask - 1;
  }
  return out;
}

// Boolean matrix product, row representation.
inline std::vector<std::uint64_t> bool_multiply(const std::vector<std::uint64_t>& a,
                                                const std::vector<std::uint64_t>& b) {
  std::vector<std::uint64_t> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = gather_rows(b, a[i]);
  return c;
}

inline std::vector<int> sorted_component(const DependencyGraph& g,
                                         std::vector<int> component) {
  if (component.empty()) throw std::invalid_argument("empty component");
  std::sort(component.begin(), component.end());
  if (std::adjacent_find(component.begin(), component.end()) != component.end())
    throw std::invalid_argument("component has duplicate vertices");
  if (component.front() < 0 || component.back() >= g.n)
    throw std::invalid_argument("component vertex out of range");
  return component;
}

// Adjacency restricted to the component, in local 0..k-1 indexing.
inline std::vector<std::uint64_t> induced_rows(const DependencyGraph& g,
                                               const std::vector<int>& component) {
  const int k = static_cast<int>(component.size());
  std::vector<int> local(g.n, -1);
  for (int v = 0; v < k; ++v) local[component[v]] = v;
  std::vector<std::uint64_t> rows(k, 0);
  for (int v = 0; v < k; ++v) {
    std::uint64_t mask = g.adj[component[v]];
    while (mask) {
      int j = std::countr_zero(mask);
      mask &= mask - 1;
      if (local[j] >= 0) rows[v] |= std::uint64_t{1} << local[j];
    }
  }
  return rows;
}

inline bool strongly_connected_rows(const std::vector<std::uint64_t>& rows) {
  const int k = static_cast<int>(rows.size());
  const std::uint64_t all = full_mask(k);
  std::uint64_t fwd = 1;
  for (;;) {
    std::uint64_t next = fwd | gather_rows(rows, fwd);
    if (next == fwd) break;
    fwd = next;
  }
  if (fwd != all) return false;
  std::uint64_t bwd = 1;
  for (;;) {
    std::uint64_t next = bwd;
    for (int v = 0; v < k; ++v)
      if (rows[v] & bwd) next |= std::uint64_t{1} << v;
    if (next == bwd) break;
    bwd = next;
  }
  return bwd == all;
}

// Breadth-first distances from `from` inside the component rows.
inline std::vector<int> bfs_distances(const std::vector<std::uint64_t>& rows, int from) {
  const int k = static_cast<int>(rows.size());
  std::vector<int> dist(k, -1);
  dist[from] = 0;
  std::uint64_t seen = std::uint64_t{1} << from;
  std::uint64_t frontier = seen;
  int d = 0;
  while (frontier) {
    std::uint64_t next = gather_rows(rows, frontier) & ~seen;
    ++d;
    std::uint64_t m = next;
    while (m) {
      dist[std::countr_zero(m)] = d;
      m &= m - 1;
    }
    seen |= next;
    frontier = next;
  }
  return dist;
}

}  // namespace detail

// Walks of length exactly m, read off Boolean powers of the adjacency
// matrix; the power for m = 0 is the identity.
inline bool walk_exists(const DependencyGraph& g, int i, int j, long long m) {
  if (i < 0 || i >= g.n || j < 0 || j >= g.n)
    throw std::invalid_argument("vertex out of range");
  if (m < 0) throw std::invalid_argument("walk length must be >= 0");
  std::uint64_t frontier = std::uint64_t{1} << i;
  while (m-- > 0 && frontier) frontier = detail::gather_rows(g.adj, frontier);
  return (frontier >> j) & 1;
}

// The loop number of a strongly connected component: the gcd of all
// exponents e in 1..k for which the e-th Boolean power of the restricted
// adjacency matrix has a nonzero diagonal entry (equivalently, the gcd of
// all circuit lengths; the period of the component). 0 when no closed walk
// of positive length exists.
inline int loop_number(const DependencyGraph& g, std::vector<int> component) {
  component = detail::sorted_component(g, std::move(component));
  const auto rows = detail::induced_rows(g, component);
  if (!detail::strongly_connected_rows(rows))
    throw std::invalid_argument("component is not strongly connected");
  const int k = static_cast<int>(component.size());
  std::vector<std::uint64_t> power = rows;
  int result = 0;
  for (int e = 1; e <= k; ++e) {
    for (int v = 0; v < k; ++v) {
      if ((power[v] >> v) & 1) {
        result = std::gcd(result, e);
        break;
      }
    }
    if (e < k) power = detail::bool_multiply(power, rows);
  }
  return result;
}

// Definitional reference implementation: enumerate closed-walk lengths from
// a base vertex up to 2*k^2 steps and return the minimum positive difference
// of two of them (0 if no closed walk exists). Exponential-free but much
// slower than the gcd route; intended for cross-checking it on small inputs.
inline int loop_number_oracle(const DependencyGraph& g, std::vector<int> component,
                              int limit = 12) {
  component = detail::sorted_component(g, std::move(component));
  const int k = static_cast<int>(component.size());
  if (k > limit)
    throw limit_error("component size " + std::to_string(k) +
                      " exceeds the loop-number oracle limit " + std::to_string(limit));
  const auto rows = detail::induced_rows(g, component);
  if (!detail::strongly_connected_rows(rows))
    throw std::invalid_argument("component is not strongly connected");
  const int horizon = 2 * k * k;
  std::uint64_t frontier = 1;
  int previous = -1;
  int best = 0;
  for (int m = 1; m <= horizon && frontier; ++m) {
    frontier = detail::gather_rows(rows, frontier);
    if (frontier & 1) {
      if (previous != -1) {
        int gap = m - previous;
        best = best == 0 ? gap : std::min(best, gap);
      }
      previous = m;
    }
  }
  if (previous == -1) return 0;
  if (best == 0) throw std::logic_error("closed-walk horizon too small");
  return best;
}

// Partition of a strongly connected component by walk-length residue mod t
// from the base vertex (the smallest index). Every edge leaves cell j and
// enters cell j+1 mod t.
inline std::vector<std::vector<int>> loop_classes(const DependencyGraph& g,
                                                  std::vector<int> component, int t) {
  if (t < 1) throw std::invalid_argument("loop_classes requires t >= 1");
  component = detail::sorted_component(g, std::move(component));
  const auto rows = detail::induced_rows(g, component);
  if (!detail::strongly_connected_rows(rows))
    throw std::invalid_argument("component is not strongly connected");
  const auto dist = detail::bfs_distances(rows, 0);
  std::vector<std::vector<int>> cells(t);
  for (std::size_t v = 0; v < component.size(); ++v)
    cells[dist[v] % t].push_back(component[v]);
  return cells;
}

// One strongly connected component with its derived data.
struct SccInfo {
  std::vector<int> vertices;  // ascending
  int loop_number = 0;
  bool reaches_zero = false;
  std::vector<std::vector<int>> loop_classes;  // t cells; empty when t = 0
};

// All components, ordered by smallest vertex, with the reachability order
// of the condensation: leq(a, b) iff some walk leads from component a into
// component b.
struct SccDecomposition {
  std::vector<SccInfo> components;
  std::vector<int> component_of;
  std::vector<std::uint64_t> reachable;  // reachable[c] bit d: walk c -> d

  bool leq(int a, int b) const { return (reachable[a] >> b) & 1; }
};

namespace detail {

struct TarjanState {
  const DependencyGraph* g = nullptr;
  std::vector<int> index, lowlink, stack_pos, stack;
  std::vector<std::vector<int>> sccs;
  int counter = 0;
};

inline void tarjan_dfs(TarjanState& st, int v) {
  st.index[v] = st.lowlink[v] = st.counter++;
  st.stack_pos[v] = static_cast<int>(st.stack.size());
  st.stack.push_back(v);

  std::uint64_t mask = st.g->adj[v];
  while (mask) {
    int w = std::countr_zero(mask);
    mask &= mask - 1;
    if (st.index[w] == -1) {
      tarjan_dfs(st, w);
      st.lowlink[v] = std::min(st.lowlink[v], st.lowlink[w]);
    } else if (st.stack_pos[w] != -1) {
      st.lowlink[v] = std::min(st.lowlink[v], st.index[w]);
    }
  }

  if (st.lowlink[v] == st.index[v]) {
    std::vector<int> scc;
    int from = st.stack_pos[v];
    for (std::size_t i = from; i < st.stack.size(); ++i) {
      scc.push_back(st.stack[i]);
      st.stack_pos[st.stack[i]] = -1;
    }
    st.stack.resize(from);
    std::sort(scc.begin(), scc.end());
    st.sccs.push_back(std::move(scc));
  }
}

}  // namespace detail

inline bool reaches_zero(const SccDecomposition& d, const DependencyGraph& g,
                         int component_id) {
  if (component_id < 0 || component_id >= static_cast<int>(d.components.size()))
    throw std::invalid_argument("component id out of range");
  std::uint64_t zero_components = 0;
  std::uint64_t zeros = g.zeros;
  while (zeros) {
    int v = std::countr_zero(zeros);
    zeros &= zeros - 1;
    zero_components |= std::uint64_t{1} << d.component_of[v];
  }
  return (d.reachable[component_id] & zero_components) != 0;
}

inline SccDecomposition strongly_connected_components(const DependencyGraph& g) {
  detail::TarjanState st;
  st.g = &g;
  st.index.assign(g.n, -1);
  st.lowlink.assign(g.n, -1);
  st.stack_pos.assign(g.n, -1);
  for (int v = 0; v < g.n; ++v)
    if (st.index[v] == -1) detail::tarjan_dfs(st, v);

  // Tarjan emits components sinks-first, so reachability folds left to right.
  const int count = static_cast<int>(st.sccs.size());
  std::vector<int> comp_of(g.n, -1);
  for (int c = 0; c < count; ++c)
    for (int v : st.sccs[c]) comp_of[v] = c;

  std::vector<std::uint64_t> reach(count, 0);
  for (int c = 0; c < count; ++c) {
    reach[c] = std::uint64_t{1} << c;
    for (int v : st.sccs[c]) {
      std::uint64_t mask = g.adj[v];
      while (mask) {
        int w = std::countr_zero(mask);
        mask &= mask - 1;
        if (comp_of[w] != c) reach[c] |= reach[comp_of[w]];
      }
    }
  }

  // Re-order by smallest vertex for deterministic reports.
  std::vector<int> order(count);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return st.sccs[a][0] < st.sccs[b][0]; });
  std::vector<int> new_id(count);
  for (int c = 0; c < count; ++c) new_id[order[c]] = c;

  SccDecomposition d;
  d.components.resize(count);
  d.component_of.assign(g.n, -1);
  d.reachable.assign(count, 0);
  for (int c = 0; c < count; ++c) {
    const int old = order[c];
    SccInfo& info = d.components[c];
    info.vertices = st.sccs[old];
    for (int v : info.vertices) d.component_of[v] = c;
    std::uint64_t mask = reach[old];
    while (mask) {
      int o = std::countr_zero(mask);
      mask &= mask - 1;
      d.reachable[c] |= std::uint64_t{1} << new_id[o];
    }
  }
  for (int c = 0; c < count; ++c) {
    SccInfo& info = d.components[c];
    info.loop_number = loop_number(g, info.vertices);
    info.reaches_zero = reaches_zero(d, g, c);
    if (info.loop_number >= 1)
      info.loop_classes = loop_classes(g, info.vertices, info.loop_number);
  }
  return d;
}

// Returns m such that for every ordered pair (a, b) in the component and
// every length L >= m*t congruent to the pair's walk-length residue mod t,
// a walk a -> b of length L exists. Derived from the walk-splicing bound
// m = s + (r^2 - r)t: r = |p|/t for the shortest closed walk p at the base
// vertex such that closed walks of lengths |p| and |p| + t both exist, and
// the 2*s_max term routes any pair through the base vertex.
inline long long transient_bound(const DependencyGraph& g, std::vector<int> component) {
  component = detail::sorted_component(g, std::move(component));
  const auto rows = detail::induced_rows(g, component);
  if (!detail::strongly_connected_rows(rows))
    throw std::invalid_argument("component is not strongly connected");
  const long long t = loop_number(g, component);
  if (t == 0) throw std::invalid_argument("transient_bound requires loop number >= 1");
  const int k = static_cast<int>(component.size());

  long long s_max = 0;
  for (int v = 0; v < k; ++v)
    for (int d : detail::bfs_distances(rows, v)) s_max = std::max<long long>(s_max, d);

  // Realized closed-walk lengths at the base vertex, far enough out that two
  // lengths t apart must appear (the realized set eventually contains every
  // multiple of t past a cubic threshold).
  const long long horizon =
      static_cast<long long>(k) * k * k / 6 + 2LL * k * k + 2 * t + 4;
  std::vector<bool> realized(horizon + 1, false);
  std::uint64_t frontier = 1;
  for (long long m = 1; m <= horizon && frontier; ++m) {
    frontier = detail::gather_rows(rows, frontier);
    if (frontier & 1) realized[m] = true;
  }
  long long p = -1;
  for (long long m = 1; m + t <= horizon; ++m) {
    if (realized[m] && realized[m + t]) {
      p = m;
      break;
    }
  }
  if (p == -1 || p % t != 0)
    throw std::logic_error("closed-walk pair search failed");
  const long long r = p / t;
  const long long threshold = 2 * s_max + (r * r - r) * t;
  return std::max<long long>(1, (threshold + t - 1) / t);
}

}  // namespace mds
