#include "norden/linalg.hpp"

#include <numeric>
#include <utility>

namespace norden {

PolyMatrix to_poly(const RationalMatrix& m) {
  PolyMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Poly(m(i, j));
  return r;
}

RationalMatrix inverse(const RationalMatrix& m) {
  if (!m.is_square()) throw DimensionMismatch("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  RationalMatrix a = m;
  RationalMatrix inv = RationalMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col).is_zero()) ++pivot;
    if (pivot == n) throw SingularMatrix(col);
    if (pivot != col)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(pivot, j), a(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    const Rational p = a(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) /= p;
      inv(col, j) /= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a(i, col).is_zero()) continue;
      const Rational f = a(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(col, j);
        inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

Signature signature(const RationalMatrix& m) {
  if (!m.is_square()) throw DimensionMismatch("signature of a non-square matrix");
  const std::size_t n = m.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (m(i, j) != m(j, i)) throw NotSymmetric(i, j);

  RationalMatrix a = m;
  // Symmetric row+column operations keep `a` congruent to `m`.
  auto swap_both = [&](std::size_t p, std::size_t q) {
    for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(q, j));
    for (std::size_t i = 0; i < n; ++i) std::swap(a(i, p), a(i, q));
  };
  auto add_both = [&](std::size_t dst, std::size_t src, const Rational& f) {
    for (std::size_t j = 0; j < n; ++j) a(dst, j) += f * a(src, j);
    for (std::size_t i = 0; i < n; ++i) a(i, dst) += f * a(i, src);
  };

  Signature s;
  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k).is_zero()) {
      std::size_t d = k + 1;
      while (d < n && a(d, d).is_zero()) ++d;
      if (d < n) {
        swap_both(k, d);
      } else {
        std::size_t off = k + 1;
        while (off < n && a(k, off).is_zero()) ++off;
        if (off == n) throw DegenerateForm(k);
        // a(k,k) becomes 2 a(k,off) + a(off,off) = 2 a(k,off) != 0.
        add_both(k, off, Rational(1));
      }
    }
    const Rational pivot = a(k, k);
    for (std::size_t i = k + 1; i < n; ++i)
      if (!a(i, k).is_zero()) add_both(i, k, -a(i, k) / pivot);
    (pivot.sign() > 0 ? s.positive : s.negative) += 1;
  }
  return s;
}

namespace {

// Row echelon form in place; returns rank and the sign/product needed for det.
std::size_t eliminate(RationalMatrix& a, Rational* det) {
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t r = 0;
  Rational d(1);
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a(p, c).is_zero()) ++p;
    if (p == rows) {
      d = 0;
      continue;
    }
    if (p != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(p, j), a(r, j));
      d = -d;
    }
    d *= a(r, c);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (a(i, c).is_zero()) continue;
      const Rational f = a(i, c) / a(r, c);
      for (std::size_t j = c; j < cols; ++j) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  if (det) *det = r == rows ? d : Rational(0);
  return r;
}

Poly cofactor_det(const PolyMatrix& m, std::vector<std::size_t>& cols, std::size_t row) {
  if (row == m.rows()) return Poly(1);
  Poly sum;
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const Poly& entry = m(row, cols[k]);
    if (entry.is_zero()) continue;
    const std::size_t c = cols[k];
    cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(k));
    Poly minor = cofactor_det(m, cols, row + 1);
    cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(k), c);
    if (minor.is_zero()) continue;
    Poly term = entry * minor;
    if (k % 2) term = -term;
    sum += term;
  }
  return sum;
}

} // namespace

std::size_t rank(const RationalMatrix& m) {
  RationalMatrix a = m;
  return eliminate(a, nullptr);
}

Rational determinant(const RationalMatrix& m) {
  if (!m.is_square()) throw DimensionMismatch("determinant of a non-square matrix");
  RationalMatrix a = m;
  Rational d;
  eliminate(a, &d);
  return d;
}

Poly determinant(const PolyMatrix& m) {
  if (!m.is_square()) throw DimensionMismatch("determinant of a non-square matrix");
  std::vector<std::size_t> cols(m.cols());
  std::iota(cols.begin(), cols.end(), std::size_t{0});
  return cofactor_det(m, cols, 0);
}

} // namespace norden
