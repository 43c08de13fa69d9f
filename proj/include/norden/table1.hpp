#pragma once

#include "norden/curvature.hpp"
#include "norden/norden_algebra.hpp"

#include <optional>
#include <string>
#include <vector>

namespace norden {

/// The six-dimensional, three-parameter family of Lie algebras carrying the
/// default J and Norden metric, with an invariant (Killing) metric.
struct Table1Family {
  ParameterList params;
  AlmostNordenAlgebra algebra;
};

/// The bracket rows of the family over `params` (exactly three names),
/// as printed, before antisymmetric completion. Indices are 0-based.
std::vector<BracketEntry> table1_brackets(const ParameterList& params);

/// Builds and validates the family. Throws Error if a bracket row breaks the
/// Jacobi identity, the invariant-metric condition or commutator orthogonality.
Table1Family build_table1(const ParameterList& params = ParameterList({"l1", "l2", "l3"}));

struct CommutatorViolation {
  enum class Kind { distinct_indices, isotropic_holomorphic };
  Kind kind;
  std::vector<std::size_t> indices;  // 0-based: i,j,k,l or the single i
  Poly value;
  std::string describe() const;
};

struct CommutatorCheck {
  std::vector<CommutatorViolation> violations;
  bool ok() const noexcept { return violations.empty(); }
};

/// g([X_i,X_j],[X_k,X_l]) = 0 for pairwise distinct i,j,k,l, and
/// g([X_i,JX_i],[X_i,JX_i]) = 0 for every i.
CommutatorCheck check_orthogonal_commutators(const AlmostNordenAlgebra& a);

struct RegressionEntry {
  std::string group;     ///< e.g. "F components"
  std::string identity;  ///< e.g. "F(1,1,6)"
  std::string expected;
  std::string computed;
  bool passed = false;
};

struct RegressionReport {
  std::vector<RegressionEntry> entries;
  bool all_passed() const;
  std::vector<const RegressionEntry*> failures() const;
  /// Entries belonging to one group.
  std::vector<const RegressionEntry*> group(const std::string& name) const;
};

/// Runs every published identity of the family (F, R, Ricci, scalar and
/// sectional curvatures, square norm of nabla J, nabla R, class membership,
/// Killing form) and reports expected against computed values. With
/// `values`, the family is evaluated first and the expectations are
/// evaluated at the same point.
RegressionReport family_regression(const Table1Family& f, const std::optional<Assignment>& values = std::nullopt);

} // namespace norden
