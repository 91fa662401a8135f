#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mds/depgraph.hpp"
#include "mds/system.hpp"

namespace mds {

// Extra dependency edges from vertices of the glued-on system g into the
// base system f. Component i of g picks up the factor x_j for each pair
// (i, j); both indices are 0-based.
struct GlueSpec {
  std::vector<std::pair<int, int>> extra_edges;
};

// Disjoint union of the two dependency graphs plus the extra edges. The
// result keeps f's components verbatim and shifts g's variables past them.
inline MonomialSystem glue(const MonomialSystem& f, const MonomialSystem& g,
                           const GlueSpec& spec) {
  check_system(f);
  check_system(g);
  const int r = f.n, s = g.n;
  if (r + s > kMaxDimension)
    throw std::invalid_argument("glued dimension exceeds the supported maximum");
  for (const auto& [y, x] : spec.extra_edges) {
    if (y < 0 || y >= s || x < 0 || x >= r)
      throw std::invalid_argument("glue edge index out of range");
    if (g.components[y].is_zero())
      throw std::invalid_argument("glue edge from a zero component");
  }
  MonomialSystem out{r + s, f.components};
  out.components.reserve(r + s);
  for (const Monomial& m : g.components)
    out.components.push_back(m.is_zero() ? Monomial::zero()
                                         : Monomial{true, m.support << r});
  for (const auto& [y, x] : spec.extra_edges)
    out.components[r + y].support |= std::uint64_t{1} << x;
  return out;
}

// Restriction of f to one strongly connected component: support variables
// outside the component are dropped, the rest reindexed to 1..k in
// ascending order of the original indices.
inline MonomialSystem component_subsystem(const MonomialSystem& f,
                                          std::vector<int> component) {
  const DependencyGraph g = build_dependency_graph(f);
  component = detail::sorted_component(g, std::move(component));
  const SccDecomposition d = strongly_connected_components(g);
  if (d.components[d.component_of[component[0]]].vertices != component)
    throw std::invalid_argument("vertex set is not a strongly connected component");
  const int k = static_cast<int>(component.size());
  std::vector<int> local(f.n, -1);
  for (int v = 0; v < k; ++v) local[component[v]] = v;
  MonomialSystem out{k, {}};
  out.components.reserve(k);
  for (int v : component) {
    const Monomial& m = f.components[v];
    if (m.is_zero()) {
      out.components.push_back(Monomial::zero());
      continue;
    }
    std::uint64_t support = 0;
    std::uint64_t mask = m.support;
    while (mask) {
      int j = std::countr_zero(mask);
      mask &= mask - 1;
      if (local[j] >= 0) support |= std::uint64_t{1} << local[j];
    }
    out.components.push_back(Monomial{true, support});
  }
  return out;
}

// g := (f_1, ..., x_i f_j, ..., f_n); multiplying the zero component is a
// no-op. Both indices are 0-based.
inline MonomialSystem multiply_coordinate(const MonomialSystem& f, int j, int i) {
  check_system(f);
  if (j < 0 || j >= f.n || i < 0 || i >= f.n)
    throw std::invalid_argument("index out of range");
  MonomialSystem out = f;
  Monomial& m = out.components[j];
  if (!m.is_zero()) m.support |= std::uint64_t{1} << i;
  return out;
}

// mf = (m f_1, ..., m f_n).
inline MonomialSystem multiply_system(const MonomialSystem& f, Monomial m) {
  check_system(f);
  if (m.support & ~full_mask(f.n))
    throw std::invalid_argument("multiplier support out of range");
  MonomialSystem out = f;
  for (Monomial& c : out.components) c = c * m;
  return out;
}

// Conjugation by a coordinate permutation: component sigma(i) of the result
// is f_i with every variable x_k renamed to x_{sigma(k)}. The state map
// commutes: evaluate(permute(f, sigma), sigma.s) = sigma.(evaluate(f, s)).
inline MonomialSystem permute(const MonomialSystem& f, const std::vector<int>& sigma) {
  check_system(f);
  if (static_cast<int>(sigma.size()) != f.n)
    throw std::invalid_argument("permutation size does not match dimension");
  std::vector<bool> hit(f.n, false);
  for (int v : sigma) {
    if (v < 0 || v >= f.n || hit[v])
      throw std::invalid_argument("not a bijection on 0..n-1");
    hit[v] = true;
  }
  MonomialSystem out{f.n, std::vector<Monomial>(f.n)};
  for (int i = 0; i < f.n; ++i) {
    const Monomial& m = f.components[i];
    if (m.is_zero()) {
      out.components[sigma[i]] = Monomial::zero();
      continue;
    }
    std::uint64_t support = 0;
    std::uint64_t mask = m.support;
    while (mask) {
      int j = std::countr_zero(mask);
      mask &= mask - 1;
      support |= std::uint64_t{1} << sigma[j];
    }
    out.components[sigma[i]] = Monomial{true, support};
  }
  return out;
}

inline State permute_state(const std::vector<int>& sigma, State s) {
  State out{s.n, 0};
  for (int j = 0; j < s.n; ++j)
    if (s.bit(j)) out.bits |= std::uint64_t{1} << sigma[j];
  return out;
}

// Deterministic given the seed: each component is zero with
// zero_probability, otherwise each variable joins the support with
// edge_density (an empty support is the constant 1).
inline MonomialSystem random_system(int n, double edge_density,
                                    double zero_probability, std::uint64_t seed) {
  if (n < 1 || n > kMaxDimension)
    throw std::invalid_argument("dimension must be in 1.." + std::to_string(kMaxDimension));
  if (edge_density < 0.0 || edge_density > 1.0 || zero_probability < 0.0 ||
      zero_probability > 1.0)
    throw std::invalid_argument("probabilities must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  auto coin = [&](double p) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p;
  };
  MonomialSystem out{n, {}};
  out.components.reserve(n);
  for (int i = 0; i < n; ++i) {
    if (coin(zero_probability)) {
      out.components.push_back(Monomial::zero());
      continue;
    }
    std::uint64_t support = 0;
    for (int j = 0; j < n; ++j)
      if (coin(edge_density)) support |= std::uint64_t{1} << j;
    out.components.push_back(Monomial{true, support});
  }
  return out;
}

}  // namespace mds
