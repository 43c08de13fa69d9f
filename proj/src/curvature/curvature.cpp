#include "norden/curvature.hpp"

namespace norden {

Tensor4 curvature_R(const AlmostNordenAlgebra& a, const ConnectionCoeffs& c) {
  const std::size_t d = a.dim();
  if (c.dim() != d) throw DimensionMismatch("connection does not match the algebra dimension");
  const Tensor3& G = c.coeffs;
  const LieAlgebra& lie = a.algebra();
  const RationalMatrix& g = a.g();
  Tensor4 R(d);
  std::vector<Poly> v(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        // R(X_i, X_j) X_k; connection coefficients are constant, so
        // nabla_i (G(j,k,m) X_m) = G(j,k,m) nabla_i X_m.
        for (auto& p : v) p = Poly();
        for (std::size_t m = 0; m < d; ++m) {
          const Poly& jk = G(j, k, m);
          const Poly& ik = G(i, k, m);
          for (std::size_t p = 0; p < d; ++p) {
            if (!jk.is_zero() && !G(i, m, p).is_zero()) v[p] += jk * G(i, m, p);
            if (!ik.is_zero() && !G(j, m, p).is_zero()) v[p] -= ik * G(j, m, p);
          }
          const Poly& br = lie.gamma(i, j, m);
          if (br.is_zero()) continue;
          for (std::size_t p = 0; p < d; ++p)
            if (!G(m, k, p).is_zero()) v[p] -= br * G(m, k, p);
        }
        for (std::size_t l = 0; l < d; ++l) {
          Poly s;
          for (std::size_t p = 0; p < d; ++p)
            if (!g(p, l).is_zero() && !v[p].is_zero()) s += v[p] * g(p, l);
          R(i, j, k, l) = std::move(s);
        }
      }
  return R;
}

Tensor4 curvature_R_invariant(const AlmostNordenAlgebra& a) {
  const std::size_t d = a.dim();
  std::vector<Vector> br(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) br[i * d + j] = a.algebra().bracket(i, j);
  Tensor4 R(d);
  const Rational quarter(-1, 4);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        for (std::size_t l = 0; l < d; ++l) R(i, j, k, l) = a.metric(br[i * d + j], br[k * d + l]) * quarter;
  return R;
}

RicciScalar ricci_and_scalar(const AlmostNordenAlgebra& a, const Tensor4& R) {
  const std::size_t d = a.dim();
  if (R.dim() != d) throw DimensionMismatch("R does not match the algebra dimension");
  const RationalMatrix& ginv = a.g_inv();
  RicciScalar out{PolyMatrix(d, d), Poly()};
  for (std::size_t y = 0; y < d; ++y)
    for (std::size_t z = 0; z < d; ++z) {
      Poly s;
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
          if (!ginv(i, j).is_zero()) s += R(i, y, z, j) * ginv(i, j);
      out.ricci(y, z) = std::move(s);
    }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      if (!ginv(i, j).is_zero()) out.tau += out.ricci(i, j) * ginv(i, j);
  return out;
}

Tensor5 nabla_R(const AlmostNordenAlgebra& a, const ConnectionCoeffs& c, const Tensor4& R) {
  const std::size_t d = a.dim();
  if (c.dim() != d || R.dim() != d) throw DimensionMismatch("inputs do not match the algebra dimension");
  const Tensor3& G = c.coeffs;
  Tensor5 out(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        for (std::size_t l = 0; l < d; ++l)
          for (std::size_t m = 0; m < d; ++m) {
            Poly s;
            for (std::size_t p = 0; p < d; ++p) {
              if (!G(i, j, p).is_zero()) s -= G(i, j, p) * R(p, k, l, m);
              if (!G(i, k, p).is_zero()) s -= G(i, k, p) * R(j, p, l, m);
              if (!G(i, l, p).is_zero()) s -= G(i, l, p) * R(j, k, p, m);
              if (!G(i, m, p).is_zero()) s -= G(i, m, p) * R(j, k, l, p);
            }
            out(i, j, k, l, m) = std::move(s);
          }
  return out;
}

Poly square_norm_nabla_J(const AlmostNordenAlgebra& a, const Tensor3& F) {
  const std::size_t d = a.dim();
  if (F.dim() != d) throw DimensionMismatch("F does not match the algebra dimension");
  const RationalMatrix& ginv = a.g_inv();
  // Raise every index of F once, then contract with F.
  Tensor3 up(d);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t l = 0; l < d; ++l)
      for (std::size_t q = 0; q < d; ++q) {
        Poly s;
        for (std::size_t i = 0; i < d; ++i) {
          if (ginv(i, j).is_zero()) continue;
          for (std::size_t k = 0; k < d; ++k) {
            if (ginv(k, l).is_zero()) continue;
            for (std::size_t p = 0; p < d; ++p)
              if (!ginv(p, q).is_zero() && !F(i, k, p).is_zero())
                s += F(i, k, p) * (ginv(i, j) * ginv(k, l) * ginv(p, q));
          }
        }
        up(j, l, q) = std::move(s);
      }
  Poly norm;
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t l = 0; l < d; ++l)
      for (std::size_t q = 0; q < d; ++q)
        if (!up(j, l, q).is_zero() && !F(j, l, q).is_zero()) norm += up(j, l, q) * F(j, l, q);
  return norm;
}

} // namespace norden
