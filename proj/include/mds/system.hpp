#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "mds/errors.hpp"

namespace mds {

// Largest dimension the fixed-width bitmask representation supports.
inline constexpr int kMaxDimension = 64;

inline constexpr std::uint64_t full_mask(int n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

// One coordinate function: the constant 0, or a square-free product of
// variables (the empty product is the constant 1). x_j^2 = x_j over F_2,
// so the support never carries multiplicities.
struct Monomial {
  bool alpha = true;          // false: the zero monomial
  std::uint64_t support = 0;  // bit j set iff x_{j+1} is a factor

  static Monomial zero() { return {false, 0}; }
  static Monomial one() { return {true, 0}; }
  static Monomial variable(int j) { return {true, std::uint64_t{1} << j}; }

  bool is_zero() const { return !alpha; }
  bool is_one() const { return alpha && support == 0; }
  bool has_variable(int j) const { return (support >> j) & 1; }

  friend Monomial operator*(Monomial a, Monomial b) {
    if (!a.alpha || !b.alpha) return zero();
    return {true, a.support | b.support};
  }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

// A parallel-update map F_2^n -> F_2^n with one monomial per coordinate.
struct MonomialSystem {
  int n = 0;
  std::vector<Monomial> components;

  friend bool operator==(const MonomialSystem&, const MonomialSystem&) = default;
};

inline void check_system(const MonomialSystem& f) {
  if (f.n < 1 || f.n > kMaxDimension)
    throw std::invalid_argument("system dimension must be in 1.." +
                                std::to_string(kMaxDimension));
  if (static_cast<int>(f.components.size()) != f.n)
    throw std::invalid_argument("component count does not match dimension");
  for (const Monomial& m : f.components) {
    if (!m.alpha && m.support != 0)
      throw std::invalid_argument("zero monomial with non-empty support");
    if (m.support & ~full_mask(f.n))
      throw std::invalid_argument("support variable out of range");
  }
}

// A point of F_2^n. Bit j holds the value of x_{j+1}.
struct State {
  int n = 0;
  std::uint64_t bits = 0;

  bool bit(int j) const { return (bits >> j) & 1; }

  friend bool operator==(const State&, const State&) = default;
};

inline State all_zeros(int n) { return {n, 0}; }
inline State all_ones(int n) { return {n, full_mask(n)}; }

// "1011" reads as x1=1, x2=0, x3=1, x4=1 (x1 leftmost).
inline State state_from_string(const std::string& s) {
  if (s.empty() || s.size() > kMaxDimension)
    throw std::invalid_argument("state string length out of range");
  State out{static_cast<int>(s.size()), 0};
  for (int j = 0; j < out.n; ++j) {
    if (s[j] == '1')
      out.bits |= std::uint64_t{1} << j;
    else if (s[j] != '0')
      throw std::invalid_argument("state string must be binary");
  }
  return out;
}

inline std::string to_string(State s) {
  std::string out(s.n, '0');
  for (int j = 0; j < s.n; ++j)
    if (s.bit(j)) out[j] = '1';
  return out;
}

inline State evaluate(const MonomialSystem& f, State s) {
  if (s.n != f.n)
    throw std::invalid_argument("state dimension does not match the system");
  std::uint64_t out = 0;
  for (int i = 0; i < f.n; ++i) {
    const Monomial& m = f.components[i];
    if (m.alpha && (s.bits & m.support) == m.support)
      out |= std::uint64_t{1} << i;
  }
  return {f.n, out};
}

inline State iterate(const MonomialSystem& f, State s, long long m) {
  if (m < 0) throw std::invalid_argument("iteration count must be >= 0");
  for (; m > 0; --m) s = evaluate(f, s);
  return s;
}

}  // namespace mds
