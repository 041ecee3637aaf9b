#include "krein/oscillator.hpp"
#include <limits>

#include <cmath>

#include "krein/linalg.hpp"
#include "krein/riccati.hpp"
#include "krein/angles.hpp"
#include "krein/enclosures.hpp"
#include "krein/tolerances.hpp"

namespace krein {

GaussHermiteRule gauss_hermite(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidInput, "quadrature needs at least one node");
  // Nodes: eigenvalues of the Hermite Jacobi matrix (off-diagonals sqrt(k/2)).
  RealVector diag = RealVector::Zero(n);
  RealVector sub(n - 1);
  for (int k = 1; k < n; ++k) sub(k - 1) = std::sqrt(k / 2.0);
  Eigen::SelfAdjointEigenSolver<RealMatrix> es;
  es.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);

  GaussHermiteRule rule;
  rule.nodes = es.eigenvalues();
  rule.weights.resize(n);
  // Christoffel weights w_i = 1 / sum_k h_k(x_i)^2 over the orthonormal
  // polynomials h_0..h_{n-1}. Unlike the squared first eigenvector
  // component, this stays accurate for far-out nodes whose weights sit below
  // the eigensolver's absolute accuracy. Once the kernel overflows, the true
  // weight underflows double and the node carries weight zero.
  const double h0 = std::pow(M_PI, -0.25);
  for (int i = 0; i < n; ++i) {
    const double x = rule.nodes(i);
    double prev = 0.0;
    double cur = h0;
    double kernel = cur * cur;
    for (int k = 0; k + 1 < n; ++k) {
      const double next = x * std::sqrt(2.0 / (k + 1)) * cur - std::sqrt(k / (k + 1.0)) * prev;
      prev = cur;
      cur = next;
      kernel += cur * cur;
      if (kernel > 1e306) {
        kernel = std::numeric_limits<double>::infinity();
        break;
      }
    }
    rule.weights(i) = 1.0 / kernel;
  }
  // Symmetrize node/weight pairs about the origin; odd integrands then
  // cancel exactly in paired summation.
  for (int i = 0, j = n - 1; i < j; ++i, --j) {
    const double x = 0.5 * (rule.nodes(j) - rule.nodes(i));
    rule.nodes(i) = -x;
    rule.nodes(j) = x;
    const double w = 0.5 * (rule.weights(i) + rule.weights(j));
    rule.weights(i) = w;
    rule.weights(j) = w;
  }
  if (n % 2 == 1) rule.nodes(n / 2) = 0.0;
  return rule;
}

std::uint64_t multiplicity(int n, int dim_n) {
  if (n < 0 || dim_n < 1) throw Error(ErrorCode::InvalidInput, "requires n >= 0 and dim_n >= 1");
  // binomial(dim_n + n - 1, n) by the multiplicative formula.
  std::uint64_t result = 1;
  for (int k = 1; k <= n; ++k) {
    result = result * static_cast<std::uint64_t>(dim_n - 1 + k) / static_cast<std::uint64_t>(k);
  }
  return result;
}

namespace {

// Orthonormal Hermite functions with the Gaussian stripped:
// h_n(x) = psi_n(x) e^{x^2/2} satisfies the same recurrence with h_0
// constant, so it stays representable at quadrature nodes far out in the
// tail where psi itself underflows.
RealMatrix weighted_hermite(const RealVector& points, int m_max, bool include_gaussian) {
  const Index npts = points.size();
  RealMatrix h(npts, m_max);
  const double pi_quarter = std::pow(M_PI, -0.25);
  for (Index k = 0; k < npts; ++k) {
    const double x = points(k);
    h(k, 0) = include_gaussian ? pi_quarter * std::exp(-0.5 * x * x) : pi_quarter;
    if (m_max > 1) h(k, 1) = x * std::sqrt(2.0) * h(k, 0);
    for (int n = 1; n + 1 < m_max; ++n) {
      h(k, n + 1) =
          x * std::sqrt(2.0 / (n + 1)) * h(k, n) - std::sqrt(n / (n + 1.0)) * h(k, n - 1);
    }
  }
  return h;
}

// Quadrature of psi_m * profile * psi_n for all m, n < m_max, summed over
// mirror node pairs so parity cancellation is exact.
RealMatrix coupling_matrix(const GaussHermiteRule& rule,
                           const std::function<double(double)>& profile, int m_max) {
  const Index n = rule.nodes.size();
  const RealMatrix h = weighted_hermite(rule.nodes, m_max, false);
  RealVector f(n);
  for (Index k = 0; k < n; ++k) f(k) = profile(rule.nodes(k));

  RealMatrix r = RealMatrix::Zero(m_max, m_max);
  for (int a = 0; a < m_max; ++a) {
    for (int b = a; b < m_max; ++b) {
      double sum = 0.0;
      for (Index i = 0, j = n - 1; i <= j; ++i, --j) {
        const double lower = rule.weights(i) * h(i, a) * f(i) * h(i, b);
        if (i == j) {
          sum += lower;
        } else {
          sum += lower + rule.weights(j) * h(j, a) * f(j) * h(j, b);
        }
      }
      r(a, b) = sum;
      r(b, a) = sum;
    }
  }
  return r;
}

} // namespace

RealMatrix hermite_functions(const RealVector& points, int m_max) {
  if (m_max < 1) throw Error(ErrorCode::InvalidInput, "m_max must be >= 1");
  return weighted_hermite(points, m_max, true);
}

OscillatorModel build_oscillator(int truncation_m, double beta,
                                 const std::function<double(double)>& profile, int quad_nodes,
                                 const std::string& profile_name) {
  if (truncation_m < 2)
    throw Error(ErrorCode::InvalidInput, "need at least two modes (one per parity)");
  if (beta < 0.0) throw Error(ErrorCode::InvalidInput, "beta must be >= 0");
  const int min_nodes = 4 * truncation_m + 50;
  if (quad_nodes == 0) quad_nodes = min_nodes;
  if (quad_nodes < min_nodes)
    throw Error(ErrorCode::InvalidInput, "quad_nodes must be >= 4 * truncation_m + 50");

  const GaussHermiteRule rule = gauss_hermite(quad_nodes);
  double odd_defect = 0.0;
  for (Index k = 0; k < rule.nodes.size(); ++k)
    odd_defect = std::max(odd_defect, std::abs(profile(rule.nodes(k)) + profile(-rule.nodes(k))));
  if (odd_defect > 1e-10)
    throw Error(ErrorCode::ProfileNotOdd, "profile(x) + profile(-x) exceeds 1e-10 on the nodes");

  const RealMatrix r = coupling_matrix(rule, profile, truncation_m);
  const RealMatrix r2 = coupling_matrix(gauss_hermite(2 * quad_nodes), profile, truncation_m);
  const double drift = beta * (r - r2).cwiseAbs().maxCoeff();
  if (drift > 1e-9)
    throw Error(ErrorCode::QuadratureUnconverged,
                "matrix elements not converged under node doubling");

  OscillatorModel model;
  model.truncation_m = truncation_m;
  model.beta = beta;
  model.quad_nodes = quad_nodes;
  model.profile_name = profile_name;
  for (int m = 0; m < truncation_m; ++m)
    (m % 2 == 0 ? model.even_modes : model.odd_modes).push_back(m);

  const Index n0 = static_cast<Index>(model.even_modes.size());
  const Index n1 = static_cast<Index>(model.odd_modes.size());
  Matrix a0 = Matrix::Zero(n0, n0);
  Matrix a1 = Matrix::Zero(n1, n1);
  for (Index i = 0; i < n0; ++i) a0(i, i) = model.even_modes[i] + 0.5;
  for (Index i = 0; i < n1; ++i) a1(i, i) = model.odd_modes[i] + 0.5;
  Matrix b(n0, n1);
  for (Index i = 0; i < n0; ++i)
    for (Index j = 0; j < n1; ++j)
      b(i, j) = Complex(0.0, beta * r(model.even_modes[i], model.odd_modes[j]));

  model.instance = build_instance(a0, a1, b, std::nullopt, Mode::JSelfAdjoint);
  model.norm_v_trunc = spectral_norm(b);
  return model;
}

OscillatorReport oscillator_report(const OscillatorModel& model) {
  OscillatorReport report;
  const Matrix l = model.instance.assemble();
  Eigen::ComplexEigenSolver<Matrix> es(l, false);
  Vector eigs = es.eigenvalues();
  sort_by_real(eigs);

  const Index n = eigs.size();
  report.eigenvalue_re.resize(n);
  report.eigenvalue_im.resize(n);
  report.cluster.resize(n);
  for (Index i = 0; i < n; ++i) {
    report.eigenvalue_re(i) = eigs(i).real();
    report.eigenvalue_im(i) = eigs(i).imag();
    report.max_imag = std::max(report.max_imag, std::abs(eigs(i).imag()));
    report.cluster[i] = std::max(0, static_cast<int>(std::lround(eigs(i).real() - 0.5)));
  }
  report.real_ok = true;
  for (Index i = 0; i < n; ++i) {
    if (std::abs(report.eigenvalue_im(i)) > 1e-9 * (1.0 + std::abs(eigs(i))))
      report.real_ok = false;
  }

  report.enclosure_applicable = model.norm_v_trunc < 0.5;
  if (report.enclosure_applicable) {
    report.r_v_used = model.norm_v_trunc > 0.0
                          ? enclosure_radius(model.norm_v_trunc, model.norm_v_trunc, 1.0).value
                          : 0.0;
    const int interior_max = model.truncation_m / 2;
    report.enclosure_ok = report.real_ok;
    for (Index i = 0; i < n; ++i) {
      if (report.cluster[i] > interior_max) continue;
      const double dist = std::abs(report.eigenvalue_re(i) - (report.cluster[i] + 0.5));
      report.max_interior_dist = std::max(report.max_interior_dist, dist);
      if (dist > report.r_v_used + 1e-9) report.enclosure_ok = false;
    }
  }

  if (model.norm_v_trunc < 1.0 / M_PI) {
    report.angle_suite_ran = true;
    report.angle_bound_rhs =
        M_PI / 2.0 * std::tan(0.5 * std::asin(2.0 * model.norm_v_trunc));
    const RiccatiSolution sol = solve_riccati_contractive(model.instance);
    const AngleReport angles = compute_angle_report(model.instance, sol);
    report.norm_tan_theta = angles.norm_tan;
    report.angle_ok = report.norm_tan_theta <= report.angle_bound_rhs + 1e-9;
  }
  return report;
}

} // namespace krein
