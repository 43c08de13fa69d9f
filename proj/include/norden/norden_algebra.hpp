#pragma once

#include "norden/lie_algebra.hpp"
#include "norden/linalg.hpp"
#include "norden/matrix.hpp"
#include "norden/tensor.hpp"

#include <optional>
#include <string>
#include <vector>

namespace norden {

/// J X_i = X_{n+i}, J X_{n+i} = -X_i on a basis of dimension 2n.
/// Column j of the result holds the components of J X_j.
RationalMatrix default_J(std::size_t n);

/// diag(1, ..., 1, -1, ..., -1) with n entries of each sign.
RationalMatrix default_metric(std::size_t n);

struct NordenViolationInfo {
  enum class Kind { j_squared, anti_isometry };
  Kind kind;
  std::size_t i, j;  // 0-based entry of the failing matrix identity
  Rational value;    // residual: (J^2 + I)(i,j) or (J^T g J + g)(i,j)
  std::string describe() const;
};

struct NordenCheck {
  std::optional<NordenViolationInfo> violation;
  bool ok() const noexcept { return !violation.has_value(); }
};

/// J^2 = -I and g(JX, JY) = -g(X, Y), i.e. J^T g J = -g, exactly.
NordenCheck check_norden(const RationalMatrix& g, const RationalMatrix& J);

/// A Lie algebra together with a constant Norden metric g and almost complex
/// structure J. Construction validates every compatibility condition.
class AlmostNordenAlgebra {
public:
  /// Throws DimensionMismatch, NotSymmetric, SingularMatrix, NordenViolation.
  AlmostNordenAlgebra(LieAlgebra algebra, RationalMatrix g, RationalMatrix J);

  /// The given algebra with the default J and metric.
  static AlmostNordenAlgebra with_defaults(LieAlgebra algebra);

  const LieAlgebra& algebra() const noexcept { return algebra_; }
  const RationalMatrix& g() const noexcept { return g_; }
  const RationalMatrix& J() const noexcept { return J_; }
  const RationalMatrix& g_inv() const noexcept { return g_inv_; }
  std::size_t dim() const noexcept { return algebra_.dim(); }
  std::size_t n() const noexcept { return algebra_.dim() / 2; }

  /// g(x, y) for component vectors.
  Poly metric(const Vector& x, const Vector& y) const;
  Vector apply_J(const Vector& x) const { return apply(J_, x); }

  AlmostNordenAlgebra evaluate(const Assignment& values) const;

  friend bool operator==(const AlmostNordenAlgebra& a, const AlmostNordenAlgebra& b) {
    return a.algebra_ == b.algebra_ && a.g_ == b.g_ && a.J_ == b.J_;
  }

private:
  LieAlgebra algebra_;
  RationalMatrix g_;
  RationalMatrix J_;
  RationalMatrix g_inv_;
};

/// g~(X, Y) = g(X, JY), as the matrix g * J.
RationalMatrix associated_metric(const AlmostNordenAlgebra& a);

struct InvariantMetricViolation {
  std::size_t i, j, k;  // 0-based
  Poly value;           // g([X_i,X_j],X_k) + g([X_i,X_k],X_j)
};

struct InvariantMetricCheck {
  std::vector<InvariantMetricViolation> violations;
  bool ok() const noexcept { return violations.empty(); }
};

/// g([X, Y], Z) + g([X, Z], Y) = 0 on all basis triples.
InvariantMetricCheck check_invariant_metric(const AlmostNordenAlgebra& a);

enum class FMethod {
  automatic,   ///< invariant-metric shortcut when it applies, otherwise the connection
  shortcut,    ///< F_ijk = 1/2 (g([X_i, J X_j], X_k) - g([X_i, X_j], J X_k)); needs an invariant metric
  connection,  ///< F(X, Y, Z) = g((nabla_X J) Y, Z) from the Levi-Civita connection
};

/// The fundamental tensor F_ijk = F(X_i, X_j, X_k).
/// FMethod::shortcut throws Error when the metric is not invariant.
Tensor3 tensor_F(const AlmostNordenAlgebra& a, FMethod method = FMethod::automatic);

/// theta(z) = g^{ij} F(e_i, e_j, z).
Covector lie_form(const AlmostNordenAlgebra& a, const Tensor3& F);

struct Classification {
  bool w0 = false;
  bool w1 = false;
  bool w2 = false;
  bool w3 = false;
  friend bool operator==(const Classification&, const Classification&) = default;
};

/// Membership in the Kaehler class W0 and the three basic classes W1, W2, W3,
/// each decided exactly on all basis triples.
Classification classify(const AlmostNordenAlgebra& a, const Tensor3& F);

/// Human-readable verdict, e.g. "W0 (Kähler with Norden metric)".
std::string describe(const Classification& c);

} // namespace norden
