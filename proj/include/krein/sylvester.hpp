#pragma once

#include "krein/core.hpp"
#include "krein/types.hpp"

namespace krein {

struct SylvesterResult {
  Matrix x;                   // n1 x n0 solution of X A0 - A1 X = Y
  double residual = 0.0;      // Frobenius norm of X A0 - A1 X - Y
  double d = 0.0;             // separation of spec(a0) and spec(a1)
  double norm_x = 0.0;        // spectral norm of X
  double applicable_constant = 0.0;  // pi/2 generically, 1 under a gap disposition
};

/// Solves X A0 - A1 X = Y for Hermitian a0, a1 with disjoint spectra via the
/// joint eigenbasis: entrywise X~_ij = Y~_ij / (lambda_j(a0) - lambda_i(a1)).
/// Throws SpectraOverlap when the spectra meet and IllConditioned when the
/// smallest eigenvalue separation is below tolerance.
SylvesterResult solve_sylvester(const Matrix& a0, const Matrix& a1, const Matrix& y);

/// Norm bound for the solution: (pi/2) * norm_y / d generically, norm_y / d
/// when one spectrum lies in a gap of the other. Throws NonpositiveSeparation.
double sylvester_bound_rhs(double norm_y, double d, const Disposition& disposition);

} // namespace krein
