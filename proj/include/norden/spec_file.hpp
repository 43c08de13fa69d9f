#pragma once

#include "norden/norden_algebra.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

namespace norden {

// Line-oriented algebra description:
//
//   dimension = 6
//   parameters = l1, l2, l3
//   [metric]            optional; "diag = ..." or one row per line
//   diag = 1, 1, 1, -1, -1, -1
//   [J]                 optional; one row per line, column j is J X_j
//   [brackets]
//   2 3 -> 5: l1; 6: l2 # [X2, X3] = l1 X5 + l2 X6
//
// '#' starts a comment. Omitted sections take the default metric and J.

/// Throws ParseError (with line number), IndexOutOfRange, NotSymmetric,
/// SingularMatrix, NordenViolation or InconsistentBrackets.
AlmostNordenAlgebra parse_spec(std::string_view text);
AlmostNordenAlgebra parse_spec_file(const std::filesystem::path& path);

/// Canonical serialization; parse_spec(emit_spec(a)) == a.
std::string emit_spec(const AlmostNordenAlgebra& a);

} // namespace norden
