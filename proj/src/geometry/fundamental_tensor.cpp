#include "norden/curvature.hpp"
#include "norden/norden_algebra.hpp"

#include <algorithm>

namespace norden {

namespace {

Tensor3 F_from_invariant_metric(const AlmostNordenAlgebra& a) {
  const std::size_t d = a.dim();
  const LieAlgebra& lie = a.algebra();
  std::vector<Vector> e, Je;
  for (std::size_t i = 0; i < d; ++i) {
    e.push_back(Vector::basis(d, i));
    Je.push_back(a.apply_J(e.back()));
  }
  Tensor3 F(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const Vector b_iJj = lie.bracket(e[i], Je[j]);
      const Vector b_ij = lie.bracket(i, j);
      for (std::size_t k = 0; k < d; ++k)
        F(i, j, k) = (a.metric(b_iJj, e[k]) - a.metric(b_ij, Je[k])) / Rational(2);
    }
  return F;
}

// F(X_i, X_j, X_k) = g(nabla_i (J X_j) - J nabla_i X_j, X_k), J constant.
Tensor3 F_from_connection(const AlmostNordenAlgebra& a) {
  const std::size_t d = a.dim();
  const ConnectionCoeffs c = levi_civita(a);
  const RationalMatrix& J = a.J();
  Tensor3 F(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Vector v(d);
      for (std::size_t m = 0; m < d; ++m)
        if (!J(m, j).is_zero()) v += Poly(J(m, j)) * c.derivative(i, m);
      v -= a.apply_J(c.derivative(i, j));
      for (std::size_t k = 0; k < d; ++k) F(i, j, k) = a.metric(v, Vector::basis(d, k));
    }
  return F;
}

// F(x, y, Jz) in basis components: sum_m J(m, k) F(i, j, m).
Poly F_with_J_last(const Tensor3& F, const RationalMatrix& J, std::size_t i, std::size_t j, std::size_t k) {
  Poly s;
  for (std::size_t m = 0; m < F.dim(); ++m)
    if (!J(m, k).is_zero()) s += F(i, j, m) * J(m, k);
  return s;
}

} // namespace

Tensor3 tensor_F(const AlmostNordenAlgebra& a, FMethod method) {
  switch (method) {
  case FMethod::shortcut:
    if (!check_invariant_metric(a).ok())
      throw Error("the bracket form of F requires an invariant metric");
    return F_from_invariant_metric(a);
  case FMethod::connection:
    return F_from_connection(a);
  case FMethod::automatic:
    break;
  }
  return check_invariant_metric(a).ok() ? F_from_invariant_metric(a) : F_from_connection(a);
}

Covector lie_form(const AlmostNordenAlgebra& a, const Tensor3& F) {
  const std::size_t d = a.dim();
  if (F.dim() != d) throw DimensionMismatch("F does not match the algebra dimension");
  Covector theta(d);
  for (std::size_t z = 0; z < d; ++z)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        if (!a.g_inv()(i, j).is_zero()) theta[z] += F(i, j, z) * a.g_inv()(i, j);
  return theta;
}

Classification classify(const AlmostNordenAlgebra& a, const Tensor3& F) {
  const std::size_t d = a.dim();
  if (F.dim() != d) throw DimensionMismatch("F does not match the algebra dimension");
  const RationalMatrix& J = a.J();
  const RationalMatrix& g = a.g();
  const RationalMatrix gJ = g * J;  // gJ(i, j) = g(X_i, J X_j)
  const Covector theta = lie_form(a, F);
  const bool theta_zero = std::all_of(theta.begin(), theta.end(), [](const Poly& p) { return p.is_zero(); });

  Covector theta_J(d);  // theta(J X_k)
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t m = 0; m < d; ++m)
      if (!J(m, k).is_zero()) theta_J[k] += theta[m] * J(m, k);

  Classification c;
  c.w0 = F.is_zero();
  c.w3 = true;
  c.w2 = theta_zero;
  c.w1 = true;
  const Rational w1_scale = Rational(1, 4 * static_cast<long>(a.n()));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        if (c.w3 && !(F(i, j, k) + F(j, k, i) + F(k, i, j)).is_zero()) c.w3 = false;
        if (c.w2 &&
            !(F_with_J_last(F, J, i, j, k) + F_with_J_last(F, J, j, k, i) + F_with_J_last(F, J, k, i, j)).is_zero())
          c.w2 = false;
        if (c.w1) {
          const Poly rhs = (theta[k] * g(i, j) + theta[j] * g(i, k) + theta_J[k] * gJ(i, j) + theta_J[j] * gJ(i, k)) *
                           w1_scale;
          if (!(F(i, j, k) - rhs).is_zero()) c.w1 = false;
        }
      }
  return c;
}

std::string describe(const Classification& c) {
  if (c.w0) return "W0 (Kähler with Norden metric)";
  std::string out;
  auto add = [&out](const char* s) { out += out.empty() ? s : std::string(", ") + s; };
  if (c.w1) add("W1");
  if (c.w2) add("W2");
  if (c.w3) add("W3 (quasi-Kähler with Norden metric)");
  return out.empty() ? "none of W0, W1, W2, W3" : out;
}

} // namespace norden
