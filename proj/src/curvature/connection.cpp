#include "norden/curvature.hpp"

namespace norden {

Vector ConnectionCoeffs::derivative(std::size_t i, std::size_t j) const {
  Vector v(dim());
  for (std::size_t k = 0; k < dim(); ++k) v[k] = coeffs(i, j, k);
  return v;
}

namespace {

// lowered(a, b, c) = g([X_a, X_b], X_c)
Tensor3 lowered_brackets(const AlmostNordenAlgebra& a) {
  const std::size_t d = a.dim();
  const RationalMatrix& g = a.g();
  Tensor3 low(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        Poly s;
        for (std::size_t m = 0; m < d; ++m) {
          const Poly& gamma = a.algebra().gamma(i, j, m);
          if (!gamma.is_zero() && !g(m, k).is_zero()) s += gamma * g(m, k);
        }
        low(i, j, k) = std::move(s);
      }
  return low;
}

} // namespace

ConnectionCoeffs levi_civita(const AlmostNordenAlgebra& a) {
  const std::size_t d = a.dim();
  const Tensor3 low = lowered_brackets(a);
  const RationalMatrix& ginv = a.g_inv();
  ConnectionCoeffs c{Tensor3(d)};
  std::vector<Poly> rhs(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      // g(nabla_i X_j, X_k) from the Koszul formula
      for (std::size_t k = 0; k < d; ++k) rhs[k] = (low(i, j, k) - low(j, k, i) + low(k, i, j)) / Rational(2);
      for (std::size_t m = 0; m < d; ++m) {
        Poly s;
        for (std::size_t k = 0; k < d; ++k)
          if (!ginv(m, k).is_zero() && !rhs[k].is_zero()) s += rhs[k] * ginv(m, k);
        c.coeffs(i, j, m) = std::move(s);
      }
    }
  return c;
}

ConnectionCoeffs half_bracket_connection(const AlmostNordenAlgebra& a) {
  const std::size_t d = a.dim();
  ConnectionCoeffs c{Tensor3(d)};
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) c.coeffs(i, j, k) = a.algebra().gamma(i, j, k) / Rational(2);
  return c;
}

} // namespace norden
