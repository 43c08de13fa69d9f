#pragma once

#include "norden/matrix.hpp"

#include <vector>

namespace norden {

/// Exact inverse by Gauss-Jordan elimination. Throws SingularMatrix with
/// the row at which no pivot was found.
RationalMatrix inverse(const RationalMatrix& m);

struct Signature {
  int positive = 0;
  int negative = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Inertia of a symmetric rational form via congruence diagonalization.
/// Throws NotSymmetric, or DegenerateForm when the form has a kernel.
Signature signature(const RationalMatrix& m);

std::size_t rank(const RationalMatrix& m);

Rational determinant(const RationalMatrix& m);

/// Determinant of a polynomial matrix by cofactor expansion along rows,
/// skipping zero entries. Intended for the small matrices used here.
Poly determinant(const PolyMatrix& m);

} // namespace norden
