#pragma once

namespace krein {

/// Numerical thresholds shared across the toolkit. The defaults are the
/// normative values; commands may override individual entries at startup.
/// Relative tolerances scale as tol * (1 + magnitude).
struct ToleranceConfig {
  // Two real spectral points count as the same point within this (relative).
  double same_point = 1e-12;
  // Hermiticity check on diagonal blocks of a j_self_adjoint instance (relative).
  double hermitian = 1e-10;
  // Imaginary parts up to this (relative) are treated as eigensolver noise.
  double real_spectrum = 1e-9;
  // Conditioning limit on the upper block of an invariant-subspace basis.
  double graph_condition = 1e8;
  // Contractivity margin: require ||K|| < 1 - contraction_margin.
  double contraction_margin = 1e-12;
  // Smallest admissible eigenvalue separation in a Sylvester solve.
  double sylvester_separation = 1e-12;
  // Eigenvalue floor inside Hermitian square roots of I - K*K.
  double sqrt_floor = 1e-14;
  // Slack below which an evaluated bound counts as violated.
  double bound_slack = 1e-8;
  // Orthonormality defect accepted in a Subspace basis.
  double orthonormal = 1e-12;
};

ToleranceConfig& tolerances();

} // namespace krein
