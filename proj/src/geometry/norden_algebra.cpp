#include "norden/norden_algebra.hpp"

#include "norden/indexing.hpp"

namespace norden {

RationalMatrix default_J(std::size_t n) {
  RationalMatrix J(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    J(n + i, i) = 1;   // J X_i = X_{n+i}
    J(i, n + i) = -1;  // J X_{n+i} = -X_i
  }
  return J;
}

RationalMatrix default_metric(std::size_t n) {
  RationalMatrix g(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    g(i, i) = 1;
    g(n + i, n + i) = -1;
  }
  return g;
}

std::string NordenViolationInfo::describe() const {
  const std::string where = "(" + std::to_string(to_external(i)) + ", " + std::to_string(to_external(j)) + ")";
  if (kind == Kind::j_squared) return "J^2 != -I at entry " + where + ": residual " + value.to_string();
  return "g(JX, JY) != -g(X, Y) at entry " + where + ": residual " + value.to_string();
}

NordenCheck check_norden(const RationalMatrix& g, const RationalMatrix& J) {
  if (!g.is_square() || !J.is_square() || g.rows() != J.rows())
    throw DimensionMismatch("metric and almost complex structure must be square of equal size");
  const std::size_t n = g.rows();
  const RationalMatrix j2 = J * J + RationalMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!j2(i, j).is_zero())
        return {NordenViolationInfo{NordenViolationInfo::Kind::j_squared, i, j, j2(i, j)}};
  const RationalMatrix anti = J.transpose() * g * J + g;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!anti(i, j).is_zero())
        return {NordenViolationInfo{NordenViolationInfo::Kind::anti_isometry, i, j, anti(i, j)}};
  return {};
}

AlmostNordenAlgebra::AlmostNordenAlgebra(LieAlgebra algebra, RationalMatrix g, RationalMatrix J)
    : algebra_(std::move(algebra)), g_(std::move(g)), J_(std::move(J)) {
  const std::size_t d = algebra_.dim();
  if (g_.rows() != d || g_.cols() != d || J_.rows() != d || J_.cols() != d)
    throw DimensionMismatch("metric and J must be " + std::to_string(d) + "x" + std::to_string(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      if (g_(i, j) != g_(j, i)) throw NotSymmetric(i, j);
  g_inv_ = inverse(g_);
  if (const auto c = check_norden(g_, J_); !c.ok()) throw NordenViolation(c.violation->describe());
  const Signature s = signature(g_);
  if (s.positive != static_cast<int>(n()) || s.negative != static_cast<int>(n()))
    throw NordenViolation("metric signature is (" + std::to_string(s.positive) + ", " + std::to_string(s.negative) +
                          "), expected (" + std::to_string(n()) + ", " + std::to_string(n()) + ")");
}

AlmostNordenAlgebra AlmostNordenAlgebra::with_defaults(LieAlgebra algebra) {
  const std::size_t n = algebra.dim() / 2;
  return AlmostNordenAlgebra(std::move(algebra), default_metric(n), default_J(n));
}

Poly AlmostNordenAlgebra::metric(const Vector& x, const Vector& y) const {
  if (x.dim() != dim() || y.dim() != dim()) throw DimensionMismatch("vector dimension mismatch");
  Poly s;
  for (std::size_t a = 0; a < dim(); ++a) {
    if (x[a].is_zero()) continue;
    for (std::size_t b = 0; b < dim(); ++b)
      if (!g_(a, b).is_zero() && !y[b].is_zero()) s += x[a] * y[b] * g_(a, b);
  }
  return s;
}

AlmostNordenAlgebra AlmostNordenAlgebra::evaluate(const Assignment& values) const {
  return AlmostNordenAlgebra(algebra_.evaluate(values), g_, J_);
}

RationalMatrix associated_metric(const AlmostNordenAlgebra& a) { return a.g() * a.J(); }

InvariantMetricCheck check_invariant_metric(const AlmostNordenAlgebra& a) {
  InvariantMetricCheck result;
  const std::size_t d = a.dim();
  const auto e = [d](std::size_t i) { return Vector::basis(d, i); };
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        Poly v = a.metric(a.algebra().bracket(i, j), e(k)) + a.metric(a.algebra().bracket(i, k), e(j));
        if (!v.is_zero()) result.violations.push_back({i, j, k, std::move(v)});
      }
  return result;
}

} // namespace norden
