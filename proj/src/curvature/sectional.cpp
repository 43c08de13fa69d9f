#include "norden/curvature.hpp"

#include "norden/indexing.hpp"

namespace norden {

PlaneSpec PlaneSpec::basis(std::size_t dim, std::size_t i, std::size_t j) {
  PlaneSpec p{std::vector<Rational>(dim), std::vector<Rational>(dim)};
  p.x.at(i) = 1;
  p.y.at(j) = 1;
  return p;
}

std::string to_string(PlaneType t) {
  switch (t) {
  case PlaneType::holomorphic: return "holomorphic";
  case PlaneType::totally_real: return "totally_real";
  case PlaneType::generic: return "generic";
  case PlaneType::degenerate: return "degenerate";
  }
  return "unknown";
}

namespace {

Rational form(const RationalMatrix& m, const std::vector<Rational>& x, const std::vector<Rational>& y) {
  Rational s;
  for (std::size_t a = 0; a < x.size(); ++a) {
    if (x[a].is_zero()) continue;
    for (std::size_t b = 0; b < y.size(); ++b)
      if (!m(a, b).is_zero() && !y[b].is_zero()) s += x[a] * m(a, b) * y[b];
  }
  return s;
}

std::vector<Rational> apply_J(const RationalMatrix& J, const std::vector<Rational>& x) {
  std::vector<Rational> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j)
      if (!J(i, j).is_zero() && !x[j].is_zero()) out[i] += J(i, j) * x[j];
  return out;
}

RationalMatrix rows_of(const std::vector<std::vector<Rational>>& vs) {
  RationalMatrix m(vs.size(), vs.front().size());
  for (std::size_t r = 0; r < vs.size(); ++r)
    for (std::size_t c = 0; c < vs[r].size(); ++c) m(r, c) = vs[r][c];
  return m;
}

void validate(const AlmostNordenAlgebra& a, const PlaneSpec& p) {
  if (p.x.size() != a.dim() || p.y.size() != a.dim()) throw DimensionMismatch("plane vectors do not match dimension");
  if (rank(rows_of({p.x, p.y})) != 2) throw Error("plane spanning vectors are linearly dependent");
}

} // namespace

Rational plane_norm(const AlmostNordenAlgebra& a, const PlaneSpec& p) {
  validate(a, p);
  const Rational gxy = form(a.g(), p.x, p.y);
  return form(a.g(), p.x, p.x) * form(a.g(), p.y, p.y) - gxy * gxy;
}

PlaneType plane_type(const AlmostNordenAlgebra& a, const PlaneSpec& p) {
  if (plane_norm(a, p).is_zero()) return PlaneType::degenerate;
  const auto Jx = apply_J(a.J(), p.x);
  const auto Jy = apply_J(a.J(), p.y);
  if (rank(rows_of({p.x, p.y, Jx, Jy})) == 2) return PlaneType::holomorphic;
  const RationalMatrix& g = a.g();
  if (form(g, Jx, p.x).is_zero() && form(g, Jx, p.y).is_zero() && form(g, Jy, p.x).is_zero() &&
      form(g, Jy, p.y).is_zero())
    return PlaneType::totally_real;
  return PlaneType::generic;
}

Poly sectional_curvature(const AlmostNordenAlgebra& a, const Tensor4& R, const PlaneSpec& p) {
  const Rational norm = plane_norm(a, p);
  if (norm.is_zero()) throw DegeneratePlane("sectional curvature of a degenerate plane");
  const std::size_t d = a.dim();
  const auto& x = p.x;
  const auto& y = p.y;
  Poly s;
  for (std::size_t i = 0; i < d; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (y[j].is_zero()) continue;
      for (std::size_t k = 0; k < d; ++k) {
        if (y[k].is_zero()) continue;
        for (std::size_t l = 0; l < d; ++l)
          if (!x[l].is_zero() && !R(i, j, k, l).is_zero()) s += R(i, j, k, l) * (x[i] * y[j] * y[k] * x[l]);
      }
    }
  }
  return s / norm;
}

std::string SectionalEntry::label() const {
  return "a" + std::to_string(to_external(i)) + std::to_string(to_external(j));
}

} // namespace norden
