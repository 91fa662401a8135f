#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mds/depgraph.hpp"
#include "mds/system.hpp"

namespace mds {

// The m-fold composition f^m, kept exact: monomials compose to monomials
// under x^2 = x, with 0 absorbing and 1 neutral.
struct SymbolicPower {
  long long exponent = 0;
  std::vector<Monomial> components;

  friend bool operator==(const SymbolicPower&, const SymbolicPower&) = default;
};

inline SymbolicPower symbolic_identity(int n) {
  SymbolicPower p{0, {}};
  p.components.reserve(n);
  for (int i = 0; i < n; ++i) p.components.push_back(Monomial::variable(i));
  return p;
}

// f^{m+1}_i = alpha_i * prod of f^m_j over the support of f_i.
inline SymbolicPower symbolic_step(const MonomialSystem& f, const SymbolicPower& prev) {
  if (static_cast<int>(prev.components.size()) != f.n)
    throw std::invalid_argument("symbolic power dimension mismatch");
  SymbolicPower out{prev.exponent + 1, std::vector<Monomial>(f.n)};
  for (int i = 0; i < f.n; ++i) {
    const Monomial& fi = f.components[i];
    if (!fi.alpha) {
      out.components[i] = Monomial::zero();
      continue;
    }
    Monomial acc = Monomial::one();
    std::uint64_t mask = fi.support;
    while (mask) {
      int j = std::countr_zero(mask);
      mask &= mask - 1;
      const Monomial& pj = prev.components[j];
      if (pj.is_zero()) {
        acc = Monomial::zero();
        break;
      }
      acc.support |= pj.support;
    }
    out.components[i] = acc;
  }
  return out;
}

inline SymbolicPower symbolic_iterate(const MonomialSystem& f, long long m) {
  if (m < 0) throw std::invalid_argument("exponent must be >= 0");
  check_system(f);
  SymbolicPower p = symbolic_identity(f.n);
  while (m-- > 0) p = symbolic_step(f, p);
  return p;
}

inline MonomialSystem as_system(const SymbolicPower& p) {
  return MonomialSystem{static_cast<int>(p.components.size()), p.components};
}

// Checks that for every i, j and 1 <= m <= m_max with f^m_i != 0, x_j
// divides f^m_i exactly when a walk a_i -> a_j of length m exists. The walk
// side runs on Boolean matrix powers, independent of the monomial algebra.
inline bool verify_factor_walk_duality(const MonomialSystem& f, long long m_max) {
  const DependencyGraph g = build_dependency_graph(f);
  std::vector<std::uint64_t> reach = g.adj;  // walks of length exactly m
  SymbolicPower p = symbolic_iterate(f, 0);
  for (long long m = 1; m <= m_max; ++m) {
    p = symbolic_step(f, p);
    if (m > 1) {
      std::vector<std::uint64_t> next(g.n);
      for (int i = 0; i < g.n; ++i) next[i] = detail::gather_rows(reach, g.adj[i]);
      reach = std::move(next);
    }
    for (int i = 0; i < g.n; ++i) {
      if (p.components[i].is_zero()) continue;
      if (p.components[i].support != reach[i]) return false;
    }
  }
  return true;
}

// Stabilized block form of a strongly connected zero-free system with loop
// number t: the least m >= 1 with f^{mt} = f^{(m+1)t}. At that point every
// component in loop class j equals y_j, the product of all class-j
// variables, and one more application of f shifts the blocks cyclically.
struct StabilizationReport {
  long long m = 0;
  int t = 0;
  std::vector<Monomial> block_products;  // y_1 .. y_t
  std::vector<int> class_sizes;          // s_1 .. s_t

  friend bool operator==(const StabilizationReport&, const StabilizationReport&) = default;
};

inline StabilizationReport stabilized_form(const MonomialSystem& f) {
  const DependencyGraph g = build_dependency_graph(f);
  const SccDecomposition d = strongly_connected_components(g);
  if (d.components.size() != 1 || g.zeros != 0)
    throw std::invalid_argument(
        "stabilized_form requires a strongly connected zero-free system");
  const SccInfo& component = d.components[0];
  const int t = component.loop_number;
  if (t < 1)
    throw std::invalid_argument("stabilized_form requires loop number >= 1");

  std::vector<int> class_of(f.n, -1);
  std::vector<Monomial> blocks(t, Monomial::one());
  std::vector<int> sizes(t, 0);
  for (int j = 0; j < t; ++j) {
    for (int v : component.loop_classes[j]) {
      class_of[v] = j;
      blocks[j].support |= std::uint64_t{1} << v;
    }
    sizes[j] = static_cast<int>(component.loop_classes[j].size());
  }

  const long long cap = static_cast<long long>(f.n) * f.n + f.n;
  SymbolicPower current = symbolic_iterate(f, t);
  for (long long m = 1; m <= cap; ++m) {
    SymbolicPower next = current;
    for (int s = 0; s < t; ++s) next = symbolic_step(f, next);
    if (next.components == current.components) {
      for (int i = 0; i < f.n; ++i)
        if (!(current.components[i] == blocks[class_of[i]]))
          throw std::logic_error("stabilized power lacks the block form");
      const SymbolicPower shifted = symbolic_step(f, current);
      for (int i = 0; i < f.n; ++i)
        if (!(shifted.components[i] == blocks[(class_of[i] + 1) % t]))
          throw std::logic_error("stabilized power lacks the cyclic block shift");
      return StabilizationReport{m, t, std::move(blocks), std::move(sizes)};
    }
    current = std::move(next);
  }
  throw std::logic_error("stabilization not reached within the iteration cap");
}

}  // namespace mds
