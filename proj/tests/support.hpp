#pragma once

// Shared generators and reference implementations for the test suites. The
// reference code here must stay independent of the library paths it checks:
// walk tables and closed-walk enumerations go through plain breadth-first
// layers, the component oracle goes through accumulated matrix powers.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mds/classify.hpp"
#include "mds/depgraph.hpp"
#include "mds/dynamics.hpp"
#include "mds/parser.hpp"
#include "mds/system.hpp"
#include "mds/transform.hpp"

namespace testsupport {

using namespace mds;

struct Rng {
  std::mt19937_64 eng;

  explicit Rng(std::uint64_t seed) : eng(seed) {}

  double uniform() { return static_cast<double>(eng() >> 11) * 0x1.0p-53; }
  int uniform_int(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(eng() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  bool coin(double p) { return uniform() < p; }
  std::uint64_t word() { return eng(); }
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline std::string fixture_path(const std::string& name) {
  return std::string(MDS_FIXTURE_DIR) + "/" + name;
}

inline MonomialSystem load_fixture(const std::string& name) {
  return parse_system(read_file(fixture_path(name)));
}

// f(x_1, ..., x_t) = (x_2, ..., x_t, x_1).
inline MonomialSystem t_gon(int t) {
  MonomialSystem f{t, {}};
  for (int i = 0; i < t; ++i)
    f.components.push_back(Monomial::variable((i + 1) % t));
  return f;
}

inline State random_state(Rng& rng, int n) {
  return State{n, rng.word() & full_mask(n)};
}

// ---- reference implementations -------------------------------------------

// masks[m] = set of vertices reachable from `from` by walks of length
// exactly m, for m = 0..horizon.
inline std::vector<std::uint64_t> walk_length_masks(const DependencyGraph& g,
                                                    int from, int horizon) {
  std::vector<std::uint64_t> masks(horizon + 1, 0);
  masks[0] = std::uint64_t{1} << from;
  for (int m = 1; m <= horizon; ++m) {
    std::uint64_t next = 0;
    std::uint64_t frontier = masks[m - 1];
    while (frontier) {
      next |= g.adj[std::countr_zero(frontier)];
      frontier &= frontier - 1;
    }
    masks[m] = next;
  }
  return masks;
}

inline std::vector<int> closed_walk_lengths(const DependencyGraph& g, int v,
                                            int horizon) {
  std::vector<int> lengths;
  const auto masks = walk_length_masks(g, v, horizon);
  for (int m = 1; m <= horizon; ++m)
    if ((masks[m] >> v) & 1) lengths.push_back(m);
  return lengths;
}

// Component partition via accumulated matrix powers A + A^2 + ... + A^n:
// j belongs to the component of i iff walks i -> j and j -> i both exist
// (i itself always does, by the empty walk).
inline std::vector<std::vector<int>> scc_by_matrix_powers(const DependencyGraph& g) {
  std::vector<std::uint64_t> acc(g.n, 0), power = g.adj;
  for (int e = 1; e <= g.n; ++e) {
    for (int i = 0; i < g.n; ++i) acc[i] |= power[i];
    if (e < g.n) {
      std::vector<std::uint64_t> next(g.n, 0);
      for (int i = 0; i < g.n; ++i) {
        std::uint64_t mask = power[i];
        while (mask) {
          next[i] |= g.adj[std::countr_zero(mask)];
          mask &= mask - 1;
        }
      }
      power = std::move(next);
    }
  }
  std::vector<std::vector<int>> components;
  std::vector<bool> placed(g.n, false);
  for (int i = 0; i < g.n; ++i) {
    if (placed[i]) continue;
    std::vector<int> comp{i};
    placed[i] = true;
    for (int j = i + 1; j < g.n; ++j) {
      const bool forward = (acc[i] >> j) & 1;
      const bool backward = (acc[j] >> i) & 1;
      if (forward && backward) {
        comp.push_back(j);
        placed[j] = true;
      }
    }
    components.push_back(std::move(comp));
  }
  return components;
}

inline std::vector<std::vector<int>> decomposition_vertex_sets(const SccDecomposition& d) {
  std::vector<std::vector<int>> sets;
  for (const SccInfo& c : d.components) sets.push_back(c.vertices);
  return sets;
}

// Orbit count of the rotation action on t-bit strings, by the averaging
// formula sum over k of 2^gcd(k, t), divided by t.
inline long long necklace_count(int t) {
  long long total = 0;
  for (int k = 0; k < t; ++k) total += 1LL << std::gcd(k, t);
  return total / t;
}

// ---- generators ------------------------------------------------------------

inline bool graph_strongly_connected(const DependencyGraph& g) {
  const std::uint64_t all = full_mask(g.n);
  std::uint64_t fwd = 1;
  for (;;) {
    std::uint64_t next = fwd;
    std::uint64_t m = fwd;
    while (m) {
      next |= g.adj[std::countr_zero(m)];
      m &= m - 1;
    }
    if (next == fwd) break;
    fwd = next;
  }
  if (fwd != all) return false;
  std::uint64_t bwd = 1;
  for (;;) {
    std::uint64_t next = bwd;
    for (int v = 0; v < g.n; ++v)
      if (g.adj[v] & bwd) next |= std::uint64_t{1} << v;
    if (next == bwd) break;
    bwd = next;
  }
  return bwd == all;
}

// Random strongly connected digraph: rejection-sample plain random digraphs,
// falling back to a random cycle plus extra edges if rejection runs long.
inline DependencyGraph random_strongly_connected_graph(Rng& rng, int n,
                                                       double extra_density = -1.0) {
  const double p = extra_density >= 0.0
                       ? extra_density
                       : std::min(0.9, (1.2 + rng.uniform()) / std::max(1, n));
  for (int attempt = 0; attempt < 60; ++attempt) {
    DependencyGraph g{n, std::vector<std::uint64_t>(n, 0), 0};
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (rng.coin(p)) g.adj[i] |= std::uint64_t{1} << j;
    if (graph_strongly_connected(g)) return g;
  }
  // Cycle through a random vertex order, plus sprinkled extras.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng.eng);
  DependencyGraph g{n, std::vector<std::uint64_t>(n, 0), 0};
  for (int i = 0; i < n; ++i)
    g.adj[order[i]] |= std::uint64_t{1} << order[(i + 1) % n];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (rng.coin(p / 2)) g.adj[i] |= std::uint64_t{1} << j;
  return g;
}

// Strongly connected zero-free system (every row becomes a product of its
// out-neighbors). Loop number >= 1 whenever n >= 2 or the vertex loops.
inline MonomialSystem random_sc_zero_free_system(Rng& rng, int n) {
  return reconstruct_system(random_strongly_connected_graph(rng, n));
}

inline MonomialSystem random_fps_system(Rng& rng, int n, double density = 0.3,
                                        double zero_prob = 0.2) {
  for (;;) {
    const MonomialSystem f = random_system(n, density, zero_prob, rng.word());
    if (classify(f).is_fixed_point_system) return f;
  }
}

inline MonomialSystem random_triangular_system(Rng& rng, int n, double density = 0.5,
                                               double zero_prob = 0.1) {
  MonomialSystem f{n, {}};
  for (int i = 0; i < n; ++i) {
    if (rng.coin(zero_prob)) {
      f.components.push_back(Monomial::zero());
      continue;
    }
    std::uint64_t support = 0;
    for (int j = 0; j <= i; ++j)
      if (rng.coin(density)) support |= std::uint64_t{1} << j;
    f.components.push_back(Monomial{true, support});
  }
  return f;
}

inline std::vector<int> random_permutation(Rng& rng, int n) {
  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  std::shuffle(sigma.begin(), sigma.end(), rng.eng);
  return sigma;
}

}  // namespace testsupport
