#include "norden/table1.hpp"

#include "norden/indexing.hpp"

namespace norden {

std::vector<BracketEntry> table1_brackets(const ParameterList& params) {
  if (params.size() != 3) throw DimensionMismatch("the family needs exactly three parameters");
  const Poly l1 = Poly::variable(params, params.names()[0]);
  const Poly l2 = Poly::variable(params, params.names()[1]);
  const Poly l3 = Poly::variable(params, params.names()[2]);
  struct Row {
    long left, right;
    std::vector<std::pair<long, Poly>> targets;
  };
  // [X_left, X_right] = sum coeff X_target, 1-based, as printed.
  const std::vector<Row> rows = {
      {2, 3, {{5, l1}, {6, l2}}},
      {3, 1, {{4, l1}, {6, l3}}},
      {1, 2, {{4, l2}, {5, l3}}},
      {5, 6, {{2, -l1}, {3, -l2}}},
      {6, 4, {{1, -l1}, {3, -l3}}},
      {4, 5, {{1, -l2}, {2, -l3}}},
      {1, 4, {{2, l2}, {3, -l1}, {5, l2}, {6, -l1}}},
      {1, 5, {{2, l3}, {4, -l2}}},
      {1, 6, {{3, -l3}, {4, l1}}},
      {2, 4, {{1, -l2}, {5, l3}}},
      {2, 5, {{1, -l3}, {3, l1}, {4, -l3}, {6, l1}}},
      {2, 6, {{3, l2}, {5, -l1}}},
      {3, 4, {{1, l1}, {6, -l3}}},
      {3, 5, {{2, -l1}, {6, l2}}},
      {3, 6, {{1, l3}, {2, -l2}, {4, l3}, {5, -l2}}},
  };
  std::vector<BracketEntry> out;
  for (const auto& r : rows) {
    BracketEntry e{from_external(r.left, 6), from_external(r.right, 6), {}};
    for (const auto& [k, c] : r.targets) e.targets.emplace(from_external(k, 6), c);
    out.push_back(std::move(e));
  }
  return out;
}

Table1Family build_table1(const ParameterList& params) {
  Table1Family f{params, AlmostNordenAlgebra::with_defaults(LieAlgebra::from_brackets(6, params, table1_brackets(params)))};
  if (const auto j = check_jacobi(f.algebra.algebra()); !j.ok())
    throw Error("bracket table breaks the Jacobi identity at (" + std::to_string(to_external(j.violations[0].i)) + "," +
                std::to_string(to_external(j.violations[0].j)) + "," + std::to_string(to_external(j.violations[0].k)) +
                ")");
  if (const auto inv = check_invariant_metric(f.algebra); !inv.ok())
    throw Error("bracket table breaks the invariant-metric condition at (" +
                std::to_string(to_external(inv.violations[0].i)) + "," +
                std::to_string(to_external(inv.violations[0].j)) + "," +
                std::to_string(to_external(inv.violations[0].k)) + ")");
  if (const auto c = check_orthogonal_commutators(f.algebra); !c.ok())
    throw Error("bracket table breaks commutator orthogonality: " + c.violations[0].describe());
  return f;
}

std::string CommutatorViolation::describe() const {
  std::string idx;
  for (auto i : indices) idx += (idx.empty() ? "" : ",") + std::to_string(to_external(i));
  if (kind == Kind::distinct_indices) return "g([X_i,X_j],[X_k,X_l]) = " + value.to_string() + " at (" + idx + ")";
  return "g([X_i,JX_i],[X_i,JX_i]) = " + value.to_string() + " at i = " + idx;
}

CommutatorCheck check_orthogonal_commutators(const AlmostNordenAlgebra& a) {
  const std::size_t d = a.dim();
  const LieAlgebra& lie = a.algebra();
  CommutatorCheck out;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      if (j == i) continue;
      const Vector bij = lie.bracket(i, j);
      for (std::size_t k = 0; k < d; ++k) {
        if (k == i || k == j) continue;
        for (std::size_t l = 0; l < d; ++l) {
          if (l == i || l == j || l == k) continue;
          Poly v = a.metric(bij, lie.bracket(k, l));
          if (!v.is_zero())
            out.violations.push_back({CommutatorViolation::Kind::distinct_indices, {i, j, k, l}, std::move(v)});
        }
      }
    }
  for (std::size_t i = 0; i < d; ++i) {
    const Vector e = Vector::basis(d, i);
    const Vector b = lie.bracket(e, a.apply_J(e));
    Poly v = a.metric(b, b);
    if (!v.is_zero()) out.violations.push_back({CommutatorViolation::Kind::isotropic_holomorphic, {i}, std::move(v)});
  }
  return out;
}

} // namespace norden
