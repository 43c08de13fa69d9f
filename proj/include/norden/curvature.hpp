#pragma once

#include "norden/norden_algebra.hpp"

#include <optional>
#include <string>
#include <vector>

namespace norden {

/// Levi-Civita connection on left-invariant fields:
/// coeffs(i, j, k) is the X_k component of nabla_{X_i} X_j.
struct ConnectionCoeffs {
  Tensor3 coeffs;

  std::size_t dim() const noexcept { return coeffs.dim(); }
  /// nabla_{X_i} X_j as a component vector.
  Vector derivative(std::size_t i, std::size_t j) const;
};

/// Solves the Koszul formula for a constant metric,
/// 2 g(nabla_x y, z) = g([x,y],z) - g([y,z],x) + g([z,x],y).
ConnectionCoeffs levi_civita(const AlmostNordenAlgebra& a);

/// 1/2 [X_i, X_j] coefficients, the connection of an invariant metric.
ConnectionCoeffs half_bracket_connection(const AlmostNordenAlgebra& a);

/// R_ijkl = g(R(X_i, X_j) X_k, X_l) with
/// R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_[X,Y] Z.
Tensor4 curvature_R(const AlmostNordenAlgebra& a, const ConnectionCoeffs& c);

/// -1/4 g([X_i, X_j], [X_k, X_l]); equals curvature_R for an invariant metric.
Tensor4 curvature_R_invariant(const AlmostNordenAlgebra& a);

struct RicciScalar {
  PolyMatrix ricci;
  Poly tau;
};

/// rho(y, z) = g^{ij} R(e_i, y, z, e_j) and tau = g^{ij} rho(e_i, e_j).
RicciScalar ricci_and_scalar(const AlmostNordenAlgebra& a, const Tensor4& R);

/// A 2-plane spanned by two constant vectors.
struct PlaneSpec {
  std::vector<Rational> x;
  std::vector<Rational> y;

  /// span{X_i, X_j} for 0-based indices.
  static PlaneSpec basis(std::size_t dim, std::size_t i, std::size_t j);
};

enum class PlaneType { holomorphic, totally_real, generic, degenerate };

std::string to_string(PlaneType t);

/// g(x,x) g(y,y) - g(x,y)^2.
Rational plane_norm(const AlmostNordenAlgebra& a, const PlaneSpec& p);

/// degenerate if plane_norm is zero; otherwise holomorphic if J maps the span
/// onto itself, totally real if g(Ju, v) = 0 on the span, generic otherwise.
/// Throws DimensionMismatch or Error for linearly dependent spanning vectors.
PlaneType plane_type(const AlmostNordenAlgebra& a, const PlaneSpec& p);

/// k = R(x, y, y, x) / plane_norm. Throws DegeneratePlane when plane_norm is 0.
Poly sectional_curvature(const AlmostNordenAlgebra& a, const Tensor4& R, const PlaneSpec& p);

/// (nabla_{X_i} R)(X_j, X_k, X_l, X_m). R has constant components in the
/// left-invariant frame, so only the four connection terms survive.
Tensor5 nabla_R(const AlmostNordenAlgebra& a, const ConnectionCoeffs& c, const Tensor4& R);

/// g^{ij} g^{kl} g^{pq} F_ikp F_jlq.
Poly square_norm_nabla_J(const AlmostNordenAlgebra& a, const Tensor3& F);

inline bool is_isotropic_kahler(const Poly& norm) { return norm.is_zero(); }

struct SectionalEntry {
  std::size_t i, j;             // 0-based basis indices spanning the plane
  PlaneType type;
  std::optional<Poly> value;    // empty for degenerate planes
  /// "a12" style label using 1-based indices.
  std::string label() const;
};

/// Aggregate of the curvature and classification computations for one algebra.
struct GeometryReport {
  Classification classification;
  Covector theta;
  PolyMatrix ricci;
  Poly tau;
  Poly nabla_j_norm;
  bool locally_symmetric = false;
  std::vector<SectionalEntry> sectional;  // all basis planes a_ij, i < j
  PolyMatrix killing_form;
};

GeometryReport build_report(const AlmostNordenAlgebra& a);

} // namespace norden
