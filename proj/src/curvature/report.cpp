#include "norden/curvature.hpp"

namespace norden {

GeometryReport build_report(const AlmostNordenAlgebra& a) {
  GeometryReport r;
  const Tensor3 F = tensor_F(a);
  r.classification = classify(a, F);
  r.theta = lie_form(a, F);
  const ConnectionCoeffs c = levi_civita(a);
  const Tensor4 R = curvature_R(a, c);
  auto [ricci, tau] = ricci_and_scalar(a, R);
  r.ricci = std::move(ricci);
  r.tau = std::move(tau);
  r.nabla_j_norm = square_norm_nabla_J(a, F);
  r.locally_symmetric = nabla_R(a, c, R).is_zero();
  const std::size_t d = a.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      const PlaneSpec p = PlaneSpec::basis(d, i, j);
      SectionalEntry e{i, j, plane_type(a, p), std::nullopt};
      if (e.type != PlaneType::degenerate) e.value = sectional_curvature(a, R, p);
      r.sectional.push_back(std::move(e));
    }
  r.killing_form = a.algebra().killing_form();
  return r;
}

} // namespace norden
