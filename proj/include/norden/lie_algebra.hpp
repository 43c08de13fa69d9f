#pragma once

#include "norden/matrix.hpp"
#include "norden/poly.hpp"

#include <array>
#include <map>
#include <vector>

namespace norden {

/// Component vector in a fixed basis X_1..X_dim.
class Vector {
public:
  Vector() = default;
  explicit Vector(std::size_t dim) : c_(dim) {}
  explicit Vector(std::vector<Poly> components) : c_(std::move(components)) {}
  /// Basis vector (0-based index).
  static Vector basis(std::size_t dim, std::size_t i);
  static Vector from_rationals(const std::vector<Rational>& v);

  std::size_t dim() const noexcept { return c_.size(); }
  Poly& operator[](std::size_t i) { return c_[i]; }
  const Poly& operator[](std::size_t i) const { return c_[i]; }
  const std::vector<Poly>& components() const noexcept { return c_; }
  bool is_zero() const;

  Vector& operator+=(const Vector& o);
  Vector& operator-=(const Vector& o);
  Vector& operator*=(const Poly& s);
  Vector operator-() const;
  friend Vector operator+(Vector a, const Vector& b) { return a += b; }
  friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
  friend Vector operator*(const Poly& s, Vector v) { return v *= s; }
  friend bool operator==(const Vector&, const Vector&) = default;

private:
  std::vector<Poly> c_;
};

/// Applies a rational matrix (columns are images of basis vectors) to v.
Vector apply(const RationalMatrix& m, const Vector& v);
Vector apply(const PolyMatrix& m, const Vector& v);

/// One row of a bracket table: [X_left, X_right] = sum coeff * X_target.
/// Indices are 0-based.
struct BracketEntry {
  std::size_t left = 0;
  std::size_t right = 0;
  std::map<std::size_t, Poly> targets;
};

/// A Lie algebra presented by structure constants in a fixed basis:
/// [X_i, X_j] = gamma(i, j, k) X_k.
class LieAlgebra {
public:
  /// Zero brackets (abelian) of the given even dimension.
  LieAlgebra(std::size_t dim, ParameterList params = {});

  /// Dense constants gamma[(i*dim + j)*dim + k]; throws InconsistentBrackets
  /// unless gamma(i,j,k) = -gamma(j,i,k) everywhere.
  LieAlgebra(std::size_t dim, ParameterList params, std::vector<Poly> gamma);

  /// Builds from a bracket table, closing it under antisymmetry. A pair
  /// given in both orders must agree up to sign; a diagonal entry [X_i, X_i]
  /// must be zero.
  static LieAlgebra from_brackets(std::size_t dim, ParameterList params, const std::vector<BracketEntry>& rows);

  std::size_t dim() const noexcept { return dim_; }
  const ParameterList& parameters() const noexcept { return params_; }

  const Poly& gamma(std::size_t i, std::size_t j, std::size_t k) const { return gamma_[(i * dim_ + j) * dim_ + k]; }

  /// [X_i, X_j] as a component vector.
  Vector bracket(std::size_t i, std::size_t j) const;
  Vector bracket(const Vector& x, const Vector& y) const;

  /// Cyclic sum [[X_i,X_j],X_k] + [[X_j,X_k],X_i] + [[X_k,X_i],X_j].
  Vector jacobiator(std::size_t i, std::size_t j, std::size_t k) const;

  /// Matrix of ad(x): column j holds [x, X_j].
  PolyMatrix ad_matrix(const Vector& x) const;

  /// B(X_i, X_j) = tr(ad X_i ad X_j).
  PolyMatrix killing_form() const;

  /// Substitutes parameter values into every structure constant.
  LieAlgebra evaluate(const Assignment& values) const;

  /// Same algebra with every structure constant multiplied by `s`.
  LieAlgebra scaled(const Rational& s) const;

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.dim_ == b.dim_ && a.gamma_ == b.gamma_;
  }

private:
  void require_dim(const Vector& v) const;

  std::size_t dim_;
  ParameterList params_;
  std::vector<Poly> gamma_;
};

struct JacobiViolation {
  std::size_t i, j, k; // 0-based, i < j < k
  Vector value;
};

struct JacobiCheck {
  std::vector<JacobiViolation> violations;
  bool ok() const noexcept { return violations.empty(); }
};

/// Exhaustive Jacobi check over all index triples i < j < k.
JacobiCheck check_jacobi(const LieAlgebra& a);

} // namespace norden
