#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "mds/errors.hpp"
#include "mds/system.hpp"

namespace mds {

// The full transition table of f on all 2^n states. Every state has
// out-degree exactly one, so a successor array captures the graph.
struct StateSpace {
  int n = 0;
  std::vector<std::uint64_t> successor;
};

inline StateSpace enumerate_state_space(const MonomialSystem& f, int limit = 24,
                                        int threads = 1) {
  check_system(f);
  if (f.n > limit)
    throw limit_error("dimension " + std::to_string(f.n) +
                      " exceeds the brute-force limit " + std::to_string(limit));
  const std::uint64_t size = std::uint64_t{1} << f.n;
  StateSpace space{f.n, std::vector<std::uint64_t>(size)};

  auto fill = [&](std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t s = lo; s < hi; ++s) {
      std::uint64_t out = 0;
      for (int i = 0; i < f.n; ++i) {
        const Monomial& m = f.components[i];
        if (m.alpha && (s & m.support) == m.support) out |= std::uint64_t{1} << i;
      }
      space.successor[s] = out;
    }
  };

  if (threads <= 1 || size < 1024) {
    fill(0, size);
  } else {
    const int workers = std::min<std::uint64_t>(threads, 64);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
      const std::uint64_t lo = size / workers * w;
      const std::uint64_t hi = w + 1 == workers ? size : size / workers * (w + 1);
      pool.emplace_back(fill, lo, hi);
    }
    for (auto& th : pool) th.join();
  }
  return space;
}

// Limit-cycle census of a state space: how many cycles of each length, the
// fixed points themselves, and the longest transient tail.
struct CycleStructure {
  std::map<std::uint64_t, std::uint64_t> cycle_counts;  // length -> count
  std::vector<State> fixed_points;                      // ascending by bits
  std::uint64_t max_transient = 0;
  std::uint64_t states_on_cycles = 0;
};

// Successor-chasing with a three-color visited array. aux holds the path
// position while a state is in progress and its transient depth once
// resolved (0 for states on a cycle).
inline CycleStructure cycle_structure(const StateSpace& space) {
  const std::uint64_t size = space.successor.size();
  std::vector<std::uint8_t> color(size, 0);  // 0 new, 1 in progress, 2 done
  std::vector<std::uint64_t> aux(size, 0);
  std::vector<std::uint64_t> path;
  CycleStructure out;

  for (std::uint64_t start = 0; start < size; ++start) {
    if (color[start] != 0) continue;
    path.clear();
    std::uint64_t u = start;
    while (color[u] == 0) {
      color[u] = 1;
      aux[u] = path.size();
      path.push_back(u);
      u = space.successor[u];
    }
    std::size_t resolved_from;
    if (color[u] == 1) {
      // New cycle: the tail of the path from u onward.
      const std::size_t idx = aux[u];
      const std::uint64_t len = path.size() - idx;
      ++out.cycle_counts[len];
      for (std::size_t i = idx; i < path.size(); ++i) {
        color[path[i]] = 2;
        aux[path[i]] = 0;
      }
      resolved_from = idx;
    } else {
      resolved_from = path.size();
    }
    for (std::size_t i = resolved_from; i-- > 0;) {
      const std::uint64_t succ = i + 1 < path.size() ? path[i + 1] : u;
      aux[path[i]] = aux[succ] + 1;
      color[path[i]] = 2;
      if (aux[path[i]] > out.max_transient) out.max_transient = aux[path[i]];
    }
  }

  for (std::uint64_t s = 0; s < size; ++s)
    if (space.successor[s] == s) out.fixed_points.push_back(State{space.n, s});
  for (const auto& [len, count] : out.cycle_counts)
    out.states_on_cycles += len * count;
  return out;
}

// Cycle structure of any loop-number-t component, computed without touching
// the component itself: the orbits of the cyclic group C_t rotating F_2^t.
inline CycleStructure predict_component_cycles(int t, int limit = 20) {
  if (t < 1) throw std::invalid_argument("t must be >= 1");
  if (t > limit)
    throw limit_error("t = " + std::to_string(t) + " exceeds the orbit limit " +
                      std::to_string(limit));
  const std::uint64_t size = std::uint64_t{1} << t;
  std::vector<bool> visited(size, false);
  CycleStructure out;
  for (std::uint64_t s = 0; s < size; ++s) {
    if (visited[s]) continue;
    std::uint64_t len = 0;
    std::uint64_t u = s;
    do {
      visited[u] = true;
      u = (u >> 1) | ((u & 1) << (t - 1));
      ++len;
    } while (u != s);
    ++out.cycle_counts[len];
  }
  out.fixed_points = {State{t, 0}, State{t, full_mask(t)}};
  out.states_on_cycles = size;
  out.max_transient = 0;
  return out;
}

inline bool is_fixed_point_system_bruteforce(const MonomialSystem& f, int limit = 24) {
  const CycleStructure cs = cycle_structure(enumerate_state_space(f, limit));
  for (const auto& [len, count] : cs.cycle_counts)
    if (len != 1) return false;
  return true;
}

}  // namespace mds
