#include "krein/angles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "krein/linalg.hpp"

namespace krein {

RealVector operator_angle(const Subspace& sub_unperturbed, const Subspace& sub_perturbed) {
  if (sub_unperturbed.ambient != sub_perturbed.ambient)
    throw Error(ErrorCode::DimensionMismatch, "subspaces live in different ambient spaces");
  // The defining quantity is arcsin sqrt(eig(I - M)) with M the perturbed
  // projector compressed to the unperturbed coordinates. The eigenvalues of
  // I - M are exactly the squared singular values of (I - P') U, and the SVD
  // route keeps full precision for small angles where the eigenvalue route
  // only reaches sqrt(eps).
  const Matrix overlap = sub_perturbed.basis.adjoint() * sub_unperturbed.basis;
  const Matrix residual = sub_unperturbed.basis - sub_perturbed.basis * overlap;
  RealVector sines = residual.jacobiSvd().singularValues();
  RealVector angles(sines.size());
  for (Index i = 0; i < sines.size(); ++i) {
    const double clipped = std::clamp(sines(i), 0.0, 1.0);
    angles(i) = std::asin(clipped);
  }
  std::sort(angles.data(), angles.data() + angles.size());
  return angles;
}

RealVector angle_from_angular_operator(const Matrix& k) {
  const auto singular = k.jacobiSvd().singularValues();
  RealVector angles = RealVector::Zero(k.cols());
  const Index count = std::min<Index>(singular.size(), angles.size());
  for (Index i = 0; i < count; ++i) angles(i) = std::atan(singular(i));
  std::sort(angles.data(), angles.data() + angles.size());
  return angles;
}

AngleNorms angle_norms(const RealVector& angles) {
  AngleNorms norms;
  if (angles.size() == 0) return norms;
  const double max_theta = angles.maxCoeff();
  norms.tan = std::tan(max_theta);
  for (Index i = 0; i < angles.size(); ++i)
    norms.sin2 = std::max(norms.sin2, std::sin(2.0 * angles(i)));
  norms.tan2 = (max_theta < M_PI / 4.0) ? std::tan(2.0 * max_theta)
                                        : std::numeric_limits<double>::infinity();
  return norms;
}

AngleReport compute_angle_report(const BlockInstance& inst, const RiccatiSolution& sol) {
  const KreinSignature sig = KreinSignature::of(inst);
  Matrix h0 = Matrix::Zero(inst.dim(), inst.n0);
  h0.topRows(inst.n0) = Matrix::Identity(inst.n0, inst.n0);
  Matrix h1 = Matrix::Zero(inst.dim(), inst.n1);
  h1.bottomRows(inst.n1) = Matrix::Identity(inst.n1, inst.n1);

  const Subspace perturbed0 = graph_subspace(sol.k, sig);
  const Subspace perturbed1 = graph_subspace(Matrix(sol.k.adjoint()), sig, GraphOver::Second);

  AngleReport report;
  report.theta0 = operator_angle(make_subspace(h0), perturbed0);
  report.theta1 = operator_angle(make_subspace(h1), perturbed1);
  const AngleNorms norms = angle_norms(report.theta0);
  report.norm_tan = norms.tan;
  report.norm_sin2 = norms.sin2;
  report.norm_tan2 = norms.tan2;
  return report;
}

} // namespace krein
