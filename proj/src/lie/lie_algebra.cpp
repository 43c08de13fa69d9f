#include "norden/lie_algebra.hpp"

#include "norden/indexing.hpp"

#include <algorithm>

namespace norden {

Vector Vector::basis(std::size_t dim, std::size_t i) {
  Vector v(dim);
  v[i] = Poly(1);
  return v;
}

Vector Vector::from_rationals(const std::vector<Rational>& v) {
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Poly(v[i]);
  return out;
}

bool Vector::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Poly& p) { return p.is_zero(); });
}

Vector& Vector::operator+=(const Vector& o) {
  if (o.dim() != dim()) throw DimensionMismatch("vector dimension mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Vector& Vector::operator-=(const Vector& o) {
  if (o.dim() != dim()) throw DimensionMismatch("vector dimension mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Vector& Vector::operator*=(const Poly& s) {
  for (auto& p : c_) p *= s;
  return *this;
}

Vector Vector::operator-() const {
  Vector r = *this;
  for (auto& p : r.c_) p = -p;
  return r;
}

Vector apply(const RationalMatrix& m, const Vector& v) {
  if (m.cols() != v.dim()) throw DimensionMismatch("matrix-vector shape mismatch");
  Vector out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero() && !v[j].is_zero()) out[i] += v[j] * m(i, j);
  return out;
}

Vector apply(const PolyMatrix& m, const Vector& v) {
  if (m.cols() != v.dim()) throw DimensionMismatch("matrix-vector shape mismatch");
  Vector out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero() && !v[j].is_zero()) out[i] += m(i, j) * v[j];
  return out;
}

namespace {

void require_even_dim(std::size_t dim) {
  if (dim == 0 || dim % 2 != 0)
    throw DimensionMismatch("algebra dimension must be a positive even integer, got " + std::to_string(dim));
}

} // namespace

LieAlgebra::LieAlgebra(std::size_t dim, ParameterList params)
    : dim_(dim), params_(std::move(params)), gamma_(dim * dim * dim) {
  require_even_dim(dim);
}

LieAlgebra::LieAlgebra(std::size_t dim, ParameterList params, std::vector<Poly> constants)
    : dim_(dim), params_(std::move(params)), gamma_(std::move(constants)) {
  require_even_dim(dim);
  if (gamma_.size() != dim * dim * dim) throw DimensionMismatch("structure constant array has wrong size");
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i; j < dim; ++j)
      for (std::size_t k = 0; k < dim; ++k)
        if (!(gamma(i, j, k) == -gamma(j, i, k)))
          throw InconsistentBrackets("structure constants not antisymmetric at [X" + std::to_string(to_external(i)) +
                                     ", X" + std::to_string(to_external(j)) + "] component X" +
                                     std::to_string(to_external(k)));
}

LieAlgebra LieAlgebra::from_brackets(std::size_t dim, ParameterList params, const std::vector<BracketEntry>& rows) {
  require_even_dim(dim);
  std::vector<Poly> gamma(dim * dim * dim);
  std::vector<bool> seen(dim * dim, false);
  auto at = [&](std::size_t i, std::size_t j, std::size_t k) -> Poly& { return gamma[(i * dim + j) * dim + k]; };
  for (const auto& row : rows) {
    if (row.left >= dim || row.right >= dim) throw IndexOutOfRange("bracket index outside the basis");
    const std::string label =
        "[X" + std::to_string(to_external(row.left)) + ", X" + std::to_string(to_external(row.right)) + "]";
    if (row.left == row.right) {
      for (const auto& [k, c] : row.targets)
        if (!c.is_zero()) throw InconsistentBrackets(label + " must be zero");
      continue;
    }
    for (const auto& [k, c] : row.targets)
      if (k >= dim) throw IndexOutOfRange(label + " has target index " + std::to_string(to_external(k)) +
                                          " outside 1.." + std::to_string(dim));
    if (seen[row.left * dim + row.right])
      throw InconsistentBrackets(label + " is given more than once");
    if (seen[row.right * dim + row.left]) {
      for (std::size_t k = 0; k < dim; ++k) {
        const auto it = row.targets.find(k);
        const Poly given = it == row.targets.end() ? Poly() : it->second;
        if (!(given == -at(row.right, row.left, k)))
          throw InconsistentBrackets(label + " contradicts antisymmetry with its reversed entry");
      }
    }
    seen[row.left * dim + row.right] = true;
    for (const auto& [k, c] : row.targets) {
      at(row.left, row.right, k) = c;
      at(row.right, row.left, k) = -c;
    }
  }
  return LieAlgebra(dim, std::move(params), std::move(gamma));
}

void LieAlgebra::require_dim(const Vector& v) const {
  if (v.dim() != dim_)
    throw DimensionMismatch("vector of dimension " + std::to_string(v.dim()) + " in algebra of dimension " +
                            std::to_string(dim_));
}

Vector LieAlgebra::bracket(std::size_t i, std::size_t j) const {
  if (i >= dim_ || j >= dim_) throw IndexOutOfRange("bracket index out of range");
  Vector out(dim_);
  for (std::size_t k = 0; k < dim_; ++k) out[k] = gamma(i, j, k);
  return out;
}

Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const {
  require_dim(x);
  require_dim(y);
  Vector out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (i == j || y[j].is_zero()) continue;
      const Poly xy = x[i] * y[j];
      for (std::size_t k = 0; k < dim_; ++k)
        if (!gamma(i, j, k).is_zero()) out[k] += xy * gamma(i, j, k);
    }
  }
  return out;
}

Vector LieAlgebra::jacobiator(std::size_t i, std::size_t j, std::size_t k) const {
  if (i >= dim_ || j >= dim_ || k >= dim_) throw IndexOutOfRange("jacobiator index out of range");
  const auto e = [this](std::size_t a) { return Vector::basis(dim_, a); };
  return bracket(bracket(i, j), e(k)) + bracket(bracket(j, k), e(i)) + bracket(bracket(k, i), e(j));
}

PolyMatrix LieAlgebra::ad_matrix(const Vector& x) const {
  require_dim(x);
  PolyMatrix m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    const Vector col = bracket(x, Vector::basis(dim_, j));
    for (std::size_t r = 0; r < dim_; ++r) m(r, j) = col[r];
  }
  return m;
}

PolyMatrix LieAlgebra::killing_form() const {
  std::vector<PolyMatrix> ad;
  ad.reserve(dim_);
  for (std::size_t i = 0; i < dim_; ++i) ad.push_back(ad_matrix(Vector::basis(dim_, i)));
  PolyMatrix b(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i; j < dim_; ++j) {
      Poly tr;
      for (std::size_t r = 0; r < dim_; ++r)
        for (std::size_t s = 0; s < dim_; ++s)
          if (!ad[i](r, s).is_zero() && !ad[j](s, r).is_zero()) tr += ad[i](r, s) * ad[j](s, r);
      b(i, j) = tr;
      b(j, i) = tr;
    }
  return b;
}

LieAlgebra LieAlgebra::evaluate(const Assignment& values) const {
  std::vector<Poly> g;
  g.reserve(gamma_.size());
  for (const auto& p : gamma_) g.push_back(p.substitute(values));
  return LieAlgebra(dim_, ParameterList{}, std::move(g));
}

LieAlgebra LieAlgebra::scaled(const Rational& s) const {
  std::vector<Poly> g = gamma_;
  for (auto& p : g) p *= s;
  return LieAlgebra(dim_, params_, std::move(g));
}

JacobiCheck check_jacobi(const LieAlgebra& a) {
  JacobiCheck result;
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vector v = a.jacobiator(i, j, k);
        if (!v.is_zero()) result.violations.push_back({i, j, k, std::move(v)});
      }
  return result;
}

} // namespace norden
