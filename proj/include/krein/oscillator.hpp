#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "krein/core.hpp"
#include "krein/types.hpp"

namespace krein {

/// Gauss-Hermite rule for the weight e^{-x^2}, nodes symmetrized about the
/// origin so that odd integrands cancel exactly.
struct GaussHermiteRule {
  RealVector nodes;    // ascending
  RealVector weights;
};
GaussHermiteRule gauss_hermite(int n);

/// Number of harmonic-oscillator eigenstates at level n in dim_n dimensions:
/// binomial(dim_n + n - 1, n).
std::uint64_t multiplicity(int n, int dim_n);

/// psi_n(x_k) for n = 0..m_max-1 (columns) at the given points (rows),
/// normalized Hermite functions by the stable three-term recurrence
/// psi_0 = pi^{-1/4} e^{-x^2/2},
/// psi_{n+1} = x sqrt(2/(n+1)) psi_n - sqrt(n/(n+1)) psi_{n-1}.
RealMatrix hermite_functions(const RealVector& points, int m_max);

/// One-dimensional harmonic oscillator truncated to the first truncation_m
/// Hermite modes, perturbed by i * beta * profile(x) with a real odd bounded
/// profile (sup |profile| = 1). Modes are sorted by parity: even modes form
/// the first block, odd modes the second, making the perturbation block
/// off-diagonal and the assembled instance j_self_adjoint under the parity
/// involution.
struct OscillatorModel {
  int truncation_m = 0;
  double beta = 0.0;
  int quad_nodes = 0;
  std::string profile_name;
  BlockInstance instance;
  double norm_v_trunc = 0.0;          // spectral norm of the truncated perturbation
  std::vector<int> even_modes, odd_modes;  // Hermite indices per block row
};

/// Builds the model; quad_nodes = 0 selects 4 * truncation_m + 50.
/// Matrix elements are Gauss-Hermite quadratures of
/// beta * psi_m(x) profile(x) psi_n(x); convergence is certified by doubling
/// the node count. Throws ProfileNotOdd and QuadratureUnconverged.
OscillatorModel build_oscillator(int truncation_m, double beta,
                                 const std::function<double(double)>& profile, int quad_nodes,
                                 const std::string& profile_name = "sin");

/// Spectral and subspace checks on a built model. Enclosure and reality are
/// asserted only for beta < 1/2, the angle pipeline only for beta < 1/pi;
/// outside those regimes the quantities are reported as observations.
/// Spectral assertions are restricted to the interior region n <= M/2, away
/// from the truncation edge.
struct OscillatorReport {
  RealVector eigenvalue_re;     // sorted ascending
  RealVector eigenvalue_im;
  std::vector<int> cluster;     // level n assigned to each eigenvalue
  double max_imag = 0.0;
  bool real_ok = false;
  double r_v_used = 0.0;
  bool enclosure_applicable = false;
  bool enclosure_ok = false;
  double max_interior_dist = 0.0;  // max |lambda - (n + 1/2)| over the interior
  bool angle_suite_ran = false;
  double angle_bound_rhs = 0.0;
  double norm_tan_theta = 0.0;
  bool angle_ok = false;
};
OscillatorReport oscillator_report(const OscillatorModel& model);

} // namespace krein
