#pragma once

#include <cstdint>
#include <vector>

#include "krein/core.hpp"
#include "krein/types.hpp"

namespace krein {

/// Radius of the closed neighbourhoods of the unperturbed spectral
/// components that contain the perturbed spectrum. Two algebraically equal
/// closed forms are evaluated; callers may cross-check them.
struct EnclosureRadius {
  double value = 0.0;           // sqrt(|B||C|) tan(arcsin(2 sqrt(|B||C|)/d) / 2)
  double algebraic_form = 0.0;  // d/2 - sqrt(d^2/4 - |B||C|)
};

/// Throws TooLargePerturbation unless sqrt(norm_b * norm_c) < d/2.
EnclosureRadius enclosure_radius(double norm_b, double norm_c, double d);

struct EnclosureReport {
  double r_v = 0.0;
  Vector eigenvalues;             // of L, sorted by real part
  std::vector<int> groups;        // component index (0 or 1) per eigenvalue
  RealVector dist_to_component;   // distance of each eigenvalue to its component
  RealVector margins;             // r_v - dist (>= 0 inside the neighbourhood)
  bool all_real = false;          // |Im| within eigensolver noise
  bool inclusion_ok = false;      // all_real and every margin >= -1e-9
};

/// Eigenvalues of L grouped by nearest unperturbed component, with reality
/// and neighbourhood inclusion reported. Requires disjoint spec(a0), spec(a1)
/// and sqrt(||B|| ||C||) < d/2 (throws HypothesesNotMet), Hermitian diagonal
/// blocks; the off-diagonal blocks may be arbitrary.
EnclosureReport verify_enclosure(const BlockInstance& inst);

/// S0(lambda) = A0 - lambda - B (A1 - lambda)^{-1} C.
/// Throws LambdaInSpectrumA1.
Matrix schur_complement(const BlockInstance& inst, Complex lambda);

/// True iff || B (A1-lambda)^{-1} C (A0-lambda)^{-1} || < 1, which puts
/// lambda in the resolvent set of L. Throws LambdaInUnperturbedSpectrum.
bool neumann_excludes(const BlockInstance& inst, Complex lambda);

/// Certifies that the strip a + r_V < Re z < b - r_V is free of spectrum,
/// given max Re W of one diagonal block <= a and b <= min Re W of the other.
/// Checks the eigenvalues of L and additionally a grid_n x grid_n sample of
/// the strip window (|Im z| <= 2 ||L||) for nonsingular L - z.
/// Throws HypothesesNotMet.
bool strip_resolvent_check(const BlockInstance& inst, double a, double b, int grid_n);

/// Eigenvalues of random 2x2 compressions L_{x,y} with unit x, y.
struct QnrSample {
  Vector points;
  int n_samples = 0;
  std::uint64_t seed = 0;
};
QnrSample sample_qnr(const BlockInstance& inst, int n_samples, std::uint64_t seed);

/// True iff the real part of every eigenvalue of L and of every sampled
/// point lies within [min spec(A), max spec(A)] up to eigensolver noise.
/// Only meaningful for j_self_adjoint instances (throws HypothesesNotMet).
bool qnr_halfplane_check(const BlockInstance& inst, const QnrSample& samples);

/// Rayleigh quotients of random unit vectors.
Vector numerical_range_sample(const Matrix& matrix, int n_samples, std::uint64_t seed);

/// Exact support function of the numerical range: the maximal real part of
/// e^{-i angle} W(matrix), computed as the top eigenvalue of the Hermitian
/// part of the rotated matrix.
double numerical_range_support(const Matrix& matrix, double angle);

} // namespace krein
