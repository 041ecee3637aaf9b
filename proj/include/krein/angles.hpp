#pragma once

#include "krein/core.hpp"
#include "krein/riccati.hpp"
#include "krein/types.hpp"

namespace krein {

/// Principal angles between the unperturbed and perturbed reducing subspaces,
/// with the trigonometric norms the bounds are stated for. Angles derived
/// from a contractive angular operator are always < pi/4.
struct AngleReport {
  RealVector theta0;  // sorted ascending, in [0, pi/2]
  RealVector theta1;
  double norm_tan = 0.0;   // tan(max theta)
  double norm_sin2 = 0.0;  // max_k sin(2 theta_k)
  double norm_tan2 = 0.0;  // tan(2 max theta), +inf once max theta >= pi/4
};

/// Angle vector theta_k = arcsin sqrt(mu_k) where the mu_k are the
/// eigenvalues of I - M and M is the projector onto the perturbed subspace
/// compressed to the unperturbed one. Eigenvalues are clipped to [0, 1]
/// before arcsin sqrt. If the perturbed subspace has smaller dimension the
/// missing directions come out at pi/2.
RealVector operator_angle(const Subspace& sub_unperturbed, const Subspace& sub_perturbed);

/// arctan of the singular values of the angular operator k, padded with
/// zeros up to the domain dimension (columns of k), sorted ascending.
RealVector angle_from_angular_operator(const Matrix& k);

/// (norm_tan, norm_sin2, norm_tan2) for a sorted angle vector.
/// norm_sin2 is the max of sin(2 theta_k) over k, not sin(2 max theta):
/// sin(2t) is non-monotone past pi/4.
struct AngleNorms {
  double tan = 0.0;
  double sin2 = 0.0;
  double tan2 = 0.0;
};
AngleNorms angle_norms(const RealVector& angles);

/// Full report for a Riccati solution: theta0 between the first coordinate
/// component and G(K), theta1 between the second and G(K*). The norms are
/// taken from theta0 (max theta0 = max theta1 = arctan ||K||).
AngleReport compute_angle_report(const BlockInstance& inst, const RiccatiSolution& sol);

} // namespace krein
