#pragma once

#include "krein/core.hpp"
#include "krein/types.hpp"

namespace krein {

/// Uniformly contractive solution K of K A0 - A1 K + K B K = -B* together
/// with the induced block diagonalization L = T diag(Lambda0, Lambda1) T^-1.
/// The graph of K is the maximal uniformly positive reducing subspace of L;
/// the graph of K* is the complementary uniformly negative one.
struct RiccatiSolution {
  Matrix k;        // n1 x n0
  double norm_k = 0.0;
  double residual = 0.0;  // Frobenius norm of K A0 - A1 K + K B K + B*
  Matrix z0, z1;          // A0 + B K and A1 - B* K*
  Matrix t, t_inv;        // similarity transform and its inverse
  Matrix lambda0, lambda1;
  RealVector sigma0_prime, sigma1_prime;  // perturbed spectral components, sorted
};

/// Direct invariant-subspace solve:
///  1. eigendecompose L and reject nonreal spectrum,
///  2. group the eigenvectors into an n0-dimensional candidate of uniformly
///     positive type (by spectral enclosure when ||V|| < d/2, otherwise by
///     exhaustive search over sign-consistent groupings for n0+n1 <= 12),
///  3. read K off the graph representation of the candidate basis,
///  4. require ||K|| < 1 and build T, Lambda0, Lambda1.
/// Throws HypothesesNotMet (general mode), NonRealSpectrum,
/// NoDefiniteInvariantSubspace, NotAGraph, NotContractive.
RiccatiSolution solve_riccati_contractive(const BlockInstance& inst);

/// Same solve, but groups eigenvalues by proximity to the given reference
/// spectral sets instead of deriving a grouping.
RiccatiSolution solve_riccati_with_partition(const BlockInstance& inst, const RealVector& ref0,
                                             const RealVector& ref1);

/// Frobenius norm of K A0 - A1 K + K B K + B*.
double riccati_residual(const Matrix& k, const BlockInstance& inst);

/// K' = K*, the solution of the adjoint equation K' A1 - A0 K' - K' B* K' = B.
Matrix dual_solution(const Matrix& k);

/// Frobenius norm of K' A1 - A0 K' - K' B* K' - B.
double dual_riccati_residual(const Matrix& k_prime, const BlockInstance& inst);

/// Frobenius norm of K Lambda0 - Lambda1 K + (I-KK*)^{1/2} B* (I-K*K)^{1/2}.
double transformed_riccati_residual(const RiccatiSolution& sol, const BlockInstance& inst);

} // namespace krein
