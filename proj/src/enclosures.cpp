#include "krein/enclosures.hpp"

#include <algorithm>
#include <cmath>

#include "krein/linalg.hpp"
#include "krein/rng.hpp"
#include "krein/tolerances.hpp"

namespace krein {

namespace {

constexpr int kQnrChunk = 1024;  // samples per derived-seed chunk

double dist_to_set(Complex z, const RealVector& set) {
  double best = std::numeric_limits<double>::infinity();
  for (Index i = 0; i < set.size(); ++i) best = std::min(best, std::abs(z - Complex(set(i))));
  return best;
}

Vector sorted_eigenvalues(const Matrix& m) {
  Eigen::ComplexEigenSolver<Matrix> es(m, false);
  Vector vals = es.eigenvalues();
  sort_by_real(vals);
  return vals;
}

} // namespace

EnclosureRadius enclosure_radius(double norm_b, double norm_c, double d) {
  if (norm_b < 0.0 || norm_c < 0.0 || d <= 0.0)
    throw Error(ErrorCode::InvalidInput, "norms must be nonnegative and d positive");
  const double v = std::sqrt(norm_b * norm_c);
  if (!(v < d / 2.0))
    throw Error(ErrorCode::TooLargePerturbation, "requires sqrt(||B|| ||C||) < d/2");
  EnclosureRadius r;
  r.value = v * std::tan(0.5 * std::asin(2.0 * v / d));
  r.algebraic_form = d / 2.0 - std::sqrt(d * d / 4.0 - v * v);
  return r;
}

EnclosureReport verify_enclosure(const BlockInstance& inst) {
  if (!is_hermitian(inst.a0, tolerances().hermitian) ||
      !is_hermitian(inst.a1, tolerances().hermitian))
    throw Error(ErrorCode::HypothesesNotMet, "diagonal blocks must be Hermitian");
  const RealVector sigma0 = hermitian_eigenvalues(inst.a0);
  const RealVector sigma1 = hermitian_eigenvalues(inst.a1);
  const double d = set_distance(sigma0, sigma1);
  if (d <= 0.0) throw Error(ErrorCode::HypothesesNotMet, "unperturbed spectra intersect");
  const double norm_b = spectral_norm(inst.b);
  const double norm_c = spectral_norm(inst.c);
  if (!(std::sqrt(norm_b * norm_c) < d / 2.0))
    throw Error(ErrorCode::HypothesesNotMet, "requires sqrt(||B|| ||C||) < d/2");

  EnclosureReport report;
  report.r_v = enclosure_radius(norm_b, norm_c, d).value;
  report.eigenvalues = sorted_eigenvalues(inst.assemble());

  const Index n = report.eigenvalues.size();
  report.groups.resize(n);
  report.dist_to_component.resize(n);
  report.margins.resize(n);
  report.all_real = true;
  const double real_tol = tolerances().real_spectrum;
  for (Index i = 0; i < n; ++i) {
    const Complex lam = report.eigenvalues(i);
    const double d0 = dist_to_set(lam, sigma0);
    const double d1 = dist_to_set(lam, sigma1);
    report.groups[i] = (d0 <= d1) ? 0 : 1;
    report.dist_to_component(i) = std::min(d0, d1);
    report.margins(i) = report.r_v - report.dist_to_component(i);
    if (std::abs(lam.imag()) > real_tol * (1.0 + std::abs(lam))) report.all_real = false;
  }
  report.inclusion_ok = report.all_real && report.margins.minCoeff() >= -1e-9;
  return report;
}

Matrix schur_complement(const BlockInstance& inst, Complex lambda) {
  const Vector eigs1 = sorted_eigenvalues(inst.a1);
  for (Index i = 0; i < eigs1.size(); ++i) {
    if (std::abs(lambda - eigs1(i)) <= tolerances().same_point * (1.0 + std::abs(lambda)))
      throw Error(ErrorCode::LambdaInSpectrumA1, "lambda lies in spec(a1)");
  }
  const Matrix shifted1 = inst.a1 - lambda * Matrix::Identity(inst.n1, inst.n1);
  return inst.a0 - lambda * Matrix::Identity(inst.n0, inst.n0) -
         inst.b * shifted1.partialPivLu().solve(inst.c);
}

bool neumann_excludes(const BlockInstance& inst, Complex lambda) {
  const Vector eigs0 = sorted_eigenvalues(inst.a0);
  const Vector eigs1 = sorted_eigenvalues(inst.a1);
  const double tol = tolerances().same_point * (1.0 + std::abs(lambda));
  for (Index i = 0; i < eigs0.size(); ++i)
    if (std::abs(lambda - eigs0(i)) <= tol)
      throw Error(ErrorCode::LambdaInUnperturbedSpectrum, "lambda lies in spec(a0)");
  for (Index i = 0; i < eigs1.size(); ++i)
    if (std::abs(lambda - eigs1(i)) <= tol)
      throw Error(ErrorCode::LambdaInUnperturbedSpectrum, "lambda lies in spec(a1)");

  const Matrix inv0 =
      (inst.a0 - lambda * Matrix::Identity(inst.n0, inst.n0)).partialPivLu().inverse();
  const Matrix inv1 =
      (inst.a1 - lambda * Matrix::Identity(inst.n1, inst.n1)).partialPivLu().inverse();
  return spectral_norm(inst.b * inv1 * inst.c * inv0) < 1.0;
}

bool strip_resolvent_check(const BlockInstance& inst, double a, double b, int grid_n) {
  if (!(b > a)) throw Error(ErrorCode::HypothesesNotMet, "requires a < b");
  const double max_re0 = max_real_numerical_range(inst.a0);
  const double min_re0 = min_real_numerical_range(inst.a0);
  const double max_re1 = max_real_numerical_range(inst.a1);
  const double min_re1 = min_real_numerical_range(inst.a1);
  const bool left0 = (max_re0 <= a && b <= min_re1);
  const bool left1 = (max_re1 <= a && b <= min_re0);
  if (!left0 && !left1)
    throw Error(ErrorCode::HypothesesNotMet,
                "numerical ranges of the diagonal blocks do not flank the strip");
  const double norm_b = spectral_norm(inst.b);
  const double norm_c = spectral_norm(inst.c);
  if (!(std::sqrt(norm_b * norm_c) < (b - a) / 2.0))
    throw Error(ErrorCode::HypothesesNotMet, "requires sqrt(||B|| ||C||) < (b-a)/2");

  const double r = enclosure_radius(norm_b, norm_c, b - a).value;
  const double lo = a + r;
  const double hi = b - r;
  const Matrix l = inst.assemble();
  const double scale = 1.0 + spectral_norm(l);
  const double guard = tolerances().real_spectrum * scale;

  const Vector eigs = sorted_eigenvalues(l);
  for (Index i = 0; i < eigs.size(); ++i) {
    const double re = eigs(i).real();
    if (re > lo + guard && re < hi - guard) return false;
  }
  if (grid_n > 0 && hi > lo) {
    const double height = 2.0 * spectral_norm(l);
    for (int i = 0; i < grid_n; ++i) {
      const double x = lo + (i + 0.5) * (hi - lo) / grid_n;
      for (int j = 0; j < grid_n; ++j) {
        const double y = -height + (j + 0.5) * (2.0 * height) / grid_n;
        const Matrix shifted = l - Complex(x, y) * Matrix::Identity(l.rows(), l.cols());
        if (min_singular_value(shifted) <= 1e-12 * scale) return false;
      }
    }
  }
  return true;
}

QnrSample sample_qnr(const BlockInstance& inst, int n_samples, std::uint64_t seed) {
  if (n_samples < 0) throw Error(ErrorCode::InvalidInput, "n_samples must be >= 0");
  QnrSample sample;
  sample.n_samples = n_samples;
  sample.seed = seed;
  sample.points.resize(2 * n_samples);
  Index out = 0;
  for (int chunk = 0; chunk * kQnrChunk < n_samples; ++chunk) {
    Rng rng(seed + static_cast<std::uint64_t>(chunk));
    const int chunk_end = std::min(n_samples, (chunk + 1) * kQnrChunk);
    for (int s = chunk * kQnrChunk; s < chunk_end; ++s) {
      const Vector x = rng.unit_vector(inst.n0);
      const Vector y = rng.unit_vector(inst.n1);
      const Complex a00 = x.dot(inst.a0 * x);
      const Complex a01 = x.dot(inst.b * y);
      const Complex a10 = y.dot(inst.c * x);
      const Complex a11 = y.dot(inst.a1 * y);
      // Eigenvalues of the 2x2 compression by the quadratic formula.
      const Complex tr = a00 + a11;
      const Complex det = a00 * a11 - a01 * a10;
      const Complex disc = std::sqrt(tr * tr - 4.0 * det);
      sample.points(out++) = 0.5 * (tr + disc);
      sample.points(out++) = 0.5 * (tr - disc);
    }
  }
  return sample;
}

bool qnr_halfplane_check(const BlockInstance& inst, const QnrSample& samples) {
  if (inst.mode != Mode::JSelfAdjoint)
    throw Error(ErrorCode::HypothesesNotMet, "half-plane bound requires a j_self_adjoint instance");
  const RealVector sigma0 = hermitian_eigenvalues(inst.a0);
  const RealVector sigma1 = hermitian_eigenvalues(inst.a1);
  const double lo = std::min(sigma0.minCoeff(), sigma1.minCoeff());
  const double hi = std::max(sigma0.maxCoeff(), sigma1.maxCoeff());
  const double tol = 1e-9 * (1.0 + std::max(std::abs(lo), std::abs(hi)));

  const Vector eigs = sorted_eigenvalues(inst.assemble());
  for (Index i = 0; i < eigs.size(); ++i)
    if (eigs(i).real() < lo - tol || eigs(i).real() > hi + tol) return false;
  for (Index i = 0; i < samples.points.size(); ++i)
    if (samples.points(i).real() < lo - tol || samples.points(i).real() > hi + tol) return false;
  return true;
}

Vector numerical_range_sample(const Matrix& matrix, int n_samples, std::uint64_t seed) {
  if (matrix.rows() != matrix.cols())
    throw Error(ErrorCode::DimensionMismatch, "numerical range needs a square matrix");
  Vector points(n_samples);
  Index out = 0;
  for (int chunk = 0; chunk * kQnrChunk < n_samples; ++chunk) {
    Rng rng(seed + static_cast<std::uint64_t>(chunk));
    const int chunk_end = std::min(n_samples, (chunk + 1) * kQnrChunk);
    for (int s = chunk * kQnrChunk; s < chunk_end; ++s) {
      const Vector x = rng.unit_vector(matrix.rows());
      points(out++) = x.dot(matrix * x);
    }
  }
  return points;
}

double numerical_range_support(const Matrix& matrix, double angle) {
  const Complex rotation = std::exp(Complex(0.0, -angle));
  return max_real_numerical_range(rotation * matrix);
}

} // namespace krein
