#pragma once

// Generators and independent oracles shared by the unit tests and the
// acceptance suite.

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "torbiv/bivector.hpp"
#include "torbiv/exact_linalg.hpp"
#include "torbiv/toric_fans.hpp"

namespace torbiv::testing {

using Rng = std::mt19937_64;

inline long uniform(Rng &rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline IntMatrix random_int_matrix(Rng &rng, std::size_t rows, std::size_t cols,
                                   long lo, long hi) {
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m(i, j) = uniform(rng, lo, hi);
  return m;
}

// Product of random elementary integer operations: row additions, swaps and
// sign flips applied to the identity.
inline IntMatrix random_unimodular(Rng &rng, std::size_t n, int steps = 12) {
  IntMatrix m = IntMatrix::identity(n);
  if (n == 1) {
    if (uniform(rng, 0, 1))
      m(0, 0) = -1;
    return m;
  }
  for (int s = 0; s < steps; ++s) {
    const auto i = static_cast<std::size_t>(uniform(rng, 0, long(n) - 1));
    auto j = static_cast<std::size_t>(uniform(rng, 0, long(n) - 2));
    if (j >= i)
      ++j;
    switch (uniform(rng, 0, 3)) {
    case 0:
    case 1: {
      const long c = uniform(rng, -2, 2);
      for (std::size_t k = 0; k < n; ++k)
        m(i, k) += c * m(j, k);
      break;
    }
    case 2:
      for (std::size_t k = 0; k < n; ++k)
        std::swap(m(i, k), m(j, k));
      break;
    default:
      for (std::size_t k = 0; k < n; ++k)
        m(i, k) = -m(i, k);
    }
  }
  return m;
}

inline Rational random_rational(Rng &rng, long num = 5, long den = 3) {
  Rational q(uniform(rng, -num, num), uniform(rng, 1, den));
  q.canonicalize();
  return q;
}

inline RatMatrix random_antisymmetric(Rng &rng, std::size_t n, double density = 0.7) {
  RatMatrix a(n, n);
  std::bernoulli_distribution keep(density);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (keep(rng)) {
        a(i, j) = random_rational(rng);
        a(j, i) = -a(i, j);
      }
  return a;
}

// u ^ v as an antisymmetric matrix.
inline RatMatrix wedge(const std::vector<Rational> &u, const std::vector<Rational> &v) {
  RatMatrix a(u.size(), u.size());
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < u.size(); ++j)
      a(i, j) = u[i] * v[j] - u[j] * v[i];
  return a;
}

inline Covector random_covector(Rng &rng, std::size_t n, long lo = -2, long hi = 2) {
  Covector c(n);
  for (auto &x : c)
    x = uniform(rng, lo, hi);
  return c;
}

inline RatMatrix antisymmetric(std::size_t n,
                               std::initializer_list<std::pair<std::pair<int, int>, long>> e) {
  RatMatrix a(n, n);
  for (const auto &[ij, v] : e) {
    a(ij.first, ij.second) = v;
    a(ij.second, ij.first) = -v;
  }
  return a;
}

// Random bivector with a mix of invariant, decomposable and generic A.
inline EquivariantBivector random_bivector(Rng &rng, std::size_t n) {
  const long kind = uniform(rng, 0, 3);
  Covector alpha = kind == 0 ? Covector(n, Integer(0)) : random_covector(rng, n);
  RatMatrix a;
  if (kind == 1) {
    std::vector<Rational> u(n), v(n);
    for (std::size_t i = 0; i < n; ++i) {
      u[i] = random_rational(rng);
      v[i] = random_rational(rng);
    }
    a = wedge(u, v);
  } else {
    a = random_antisymmetric(rng, n, kind == 3 ? 0.3 : 0.7);
  }
  return EquivariantBivector(alpha, a);
}

// ---------------------------------------------------------------------------
// Laurent polynomials with exact coefficients, for a Schouten-bracket oracle
// that does not use the closed-form criterion.

using Exponent = std::vector<long>;
using Laurent = std::map<Exponent, Rational>;

inline void add_term(Laurent &p, const Exponent &e, const Rational &c) {
  if (c == 0)
    return;
  auto [it, inserted] = p.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0)
      p.erase(it);
  }
}

inline Laurent derivative(const Laurent &p, std::size_t var) {
  Laurent out;
  for (const auto &[e, c] : p) {
    if (e[var] == 0)
      continue;
    Exponent d = e;
    d[var] -= 1;
    add_term(out, d, c * Rational(e[var]));
  }
  return out;
}

inline Laurent multiply(const Laurent &p, const Laurent &q) {
  Laurent out;
  for (const auto &[e1, c1] : p)
    for (const auto &[e2, c2] : q) {
      Exponent e(e1.size());
      for (std::size_t i = 0; i < e.size(); ++i)
        e[i] = e1[i] + e2[i];
      add_term(out, e, c1 * c2);
    }
  return out;
}

// Coefficient functions pi^{ij} = a_ij z^alpha z_i z_j, then the cyclic
// Jacobi sum  sum_i pi^{ij} d_i pi^{hk} + pi^{ih} d_i pi^{kj} + pi^{ik} d_i pi^{jh}
// for every j < h < k. True iff every sum vanishes identically.
inline bool schouten_vanishes(const EquivariantBivector &bv) {
  const std::size_t n = bv.dim();
  std::vector<std::vector<Laurent>> pi(n, std::vector<Laurent>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Exponent e(n);
      for (std::size_t h = 0; h < n; ++h)
        e[h] = bv.alpha()[h].get_si() + (h == i) + (h == j);
      add_term(pi[i][j], e, bv.a()(i, j));
    }
  std::vector<std::vector<std::vector<Laurent>>> dpi(n);
  for (std::size_t v = 0; v < n; ++v) {
    dpi[v].assign(n, std::vector<Laurent>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        dpi[v][i][j] = derivative(pi[i][j], v);
  }
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t h = j + 1; h < n; ++h)
      for (std::size_t k = h + 1; k < n; ++k) {
        Laurent sum;
        for (std::size_t i = 0; i < n; ++i)
          for (const Laurent &t : {multiply(pi[i][j], dpi[i][h][k]),
                                   multiply(pi[i][h], dpi[i][k][j]),
                                   multiply(pi[i][k], dpi[i][j][h])})
            for (const auto &[e, c] : t)
              add_term(sum, e, c);
        if (!sum.empty())
          return false;
      }
  return true;
}

// Gallery used by property tests and the acceptance sweep.
inline std::vector<Fan> sweep_gallery() {
  std::vector<Fan> out;
  for (long n : {2, 3, 4})
    out.push_back(builtin_fan("projective_space", {n}));
  out.push_back(builtin_fan("product_p1_p1", {}));
  for (long a : {0, 1, 2, 3})
    out.push_back(builtin_fan("hirzebruch", {a}));
  out.push_back(builtin_fan("blowup_c2", {}));
  for (long n : {2, 3, 4, 5})
    out.push_back(builtin_fan("affine_space", {n}));
  return out;
}

// Small grid of integer points of N, centred at the origin.
inline std::vector<LatticeVector> grid(std::size_t n, long radius) {
  std::vector<LatticeVector> out;
  LatticeVector x(n, Integer(-radius));
  while (true) {
    out.push_back(x);
    std::size_t i = 0;
    while (i < n && x[i] == radius)
      x[i++] = -radius;
    if (i == n)
      break;
    x[i] += 1;
  }
  return out;
}

// Brute force: x is a nonnegative integer combination of the generators with
// coefficients up to `bound` (enough for unimodular cones on small grids).
inline bool in_cone_brute(const Cone &c, const LatticeVector &x, long bound) {
  const std::size_t d = c.size(), n = c.ambient_dim();
  std::vector<long> lam(d, 0);
  while (true) {
    bool ok = true;
    for (std::size_t r = 0; r < n && ok; ++r) {
      Integer s = 0;
      for (std::size_t g = 0; g < d; ++g)
        s += c.generator(g)[r] * lam[g];
      ok = s == x[r];
    }
    if (ok)
      return true;
    std::size_t i = 0;
    while (i < d && lam[i] == bound)
      lam[i++] = 0;
    if (i == d)
      return false;
    ++lam[i];
  }
}

} // namespace torbiv::testing
