#pragma once

// Brute-force geometry over plain Rational arrays, written independently of
// the library's tensor code. Used to cross-check the symbolic pipeline.

#include "norden/norden_algebra.hpp"

#include <vector>

namespace norden::testing {

struct NumericModel {
  std::size_t n = 0;
  std::vector<Rational> c;     // c[(i*n+j)*n+k] = gamma_ij^k
  std::vector<Rational> g;     // g[i*n+j]
  std::vector<Rational> ginv;  // inverse of g
  std::vector<Rational> J;     // J[i*n+j], column j = J X_j

  const Rational& C(std::size_t i, std::size_t j, std::size_t k) const { return c[(i * n + j) * n + k]; }
  const Rational& G(std::size_t i, std::size_t j) const { return g[i * n + j]; }
  const Rational& Gi(std::size_t i, std::size_t j) const { return ginv[i * n + j]; }
  const Rational& Jm(std::size_t i, std::size_t j) const { return J[i * n + j]; }
};

inline std::vector<Rational> gauss_jordan_inverse(std::vector<Rational> a, std::size_t n) {
  std::vector<Rational> inv(n * n);
  for (std::size_t i = 0; i < n; ++i) inv[i * n + i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (a[p * n + col].is_zero()) ++p;
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(a[p * n + j], a[col * n + j]);
      std::swap(inv[p * n + j], inv[col * n + j]);
    }
    const Rational piv = a[col * n + col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col * n + j] /= piv;
      inv[col * n + j] /= piv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const Rational f = a[r * n + col];
      for (std::size_t j = 0; j < n; ++j) {
        a[r * n + j] -= f * a[col * n + j];
        inv[r * n + j] -= f * inv[col * n + j];
      }
    }
  }
  return inv;
}

/// Evaluates the structure constants at `values` and copies g and J.
inline NumericModel numeric_model(const AlmostNordenAlgebra& a, const Assignment& values) {
  NumericModel m;
  m.n = a.dim();
  const std::size_t n = m.n;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) m.c.push_back(a.algebra().gamma(i, j, k).eval(values));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      m.g.push_back(a.g()(i, j));
      m.J.push_back(a.J()(i, j));
    }
  m.ginv = gauss_jordan_inverse(m.g, n);
  return m;
}

struct NumericGeometry {
  std::vector<Rational> nabla;  // (i*n+j)*n+k: X_k component of nabla_i X_j
  std::vector<Rational> F;      // (i*n+j)*n+k
  std::vector<Rational> R;      // ((i*n+j)*n+k)*n+l
  std::vector<Rational> rho;    // i*n+j
  std::vector<Rational> theta;
  Rational tau;
  Rational norm;
};

inline NumericGeometry numeric_geometry(const NumericModel& m) {
  const std::size_t n = m.n;
  NumericGeometry out;
  out.nabla.assign(n * n * n, Rational());
  auto low = [&](std::size_t a, std::size_t b, std::size_t c) {
    Rational s;
    for (std::size_t q = 0; q < n; ++q) s += m.C(a, b, q) * m.G(q, c);
    return s;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Rational s;
        for (std::size_t z = 0; z < n; ++z)
          s += m.Gi(k, z) * (low(i, j, z) - low(j, z, i) + low(z, i, j)) / Rational(2);
        out.nabla[(i * n + j) * n + k] = s;
      }
  auto Nb = [&](std::size_t i, std::size_t j, std::size_t k) -> const Rational& { return out.nabla[(i * n + j) * n + k]; };

  // F(X_i, X_j, X_k) = g(nabla_i(J X_j) - J(nabla_i X_j), X_k)
  out.F.assign(n * n * n, Rational());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Rational> v(n);
      for (std::size_t q = 0; q < n; ++q)
        for (std::size_t mm = 0; mm < n; ++mm) v[q] += m.Jm(mm, j) * Nb(i, mm, q);
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) v[p] -= m.Jm(p, q) * Nb(i, j, q);
      for (std::size_t k = 0; k < n; ++k) {
        Rational s;
        for (std::size_t p = 0; p < n; ++p) s += v[p] * m.G(p, k);
        out.F[(i * n + j) * n + k] = s;
      }
    }

  out.R.assign(n * n * n * n, Rational());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        std::vector<Rational> v(n);
        for (std::size_t mm = 0; mm < n; ++mm)
          for (std::size_t p = 0; p < n; ++p)
            v[p] += Nb(j, k, mm) * Nb(i, mm, p) - Nb(i, k, mm) * Nb(j, mm, p) - m.C(i, j, mm) * Nb(mm, k, p);
        for (std::size_t l = 0; l < n; ++l) {
          Rational s;
          for (std::size_t p = 0; p < n; ++p) s += v[p] * m.G(p, l);
          out.R[((i * n + j) * n + k) * n + l] = s;
        }
      }

  out.rho.assign(n * n, Rational());
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t z = 0; z < n; ++z)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.rho[y * n + z] += m.Gi(i, j) * out.R[((i * n + y) * n + z) * n + j];
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.tau += m.Gi(i, j) * out.rho[i * n + j];

  out.theta.assign(n, Rational());
  for (std::size_t z = 0; z < n; ++z)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) out.theta[z] += m.Gi(i, j) * out.F[(i * n + j) * n + z];

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l)
          for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q) {
              const Rational w = m.Gi(i, j) * m.Gi(k, l) * m.Gi(p, q);
              if (w.is_zero()) continue;
              out.norm += w * out.F[(i * n + k) * n + p] * out.F[(j * n + l) * n + q];
            }
  return out;
}

} // namespace norden::testing
