#include "krein/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace krein {

double spectral_norm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  return m.jacobiSvd().singularValues()(0);
}

double min_singular_value(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  const auto sv = m.jacobiSvd().singularValues();
  return sv(sv.size() - 1);
}

double condition_number(const Matrix& m) {
  const auto sv = m.jacobiSvd().singularValues();
  const double smin = sv(sv.size() - 1);
  if (smin == 0.0) return std::numeric_limits<double>::infinity();
  return sv(0) / smin;
}

bool is_hermitian(const Matrix& m, double rel_tol) {
  return hermiticity_defect(m) <= rel_tol * (1.0 + m.norm());
}

double hermiticity_defect(const Matrix& m) {
  return (m - m.adjoint()).norm();
}

RealVector hermitian_eigenvalues(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

namespace {

Matrix hermitian_power(const Matrix& m, double floor, double exponent) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(m);
  RealVector vals = es.eigenvalues();
  for (Index i = 0; i < vals.size(); ++i) {
    vals(i) = std::pow(std::max(vals(i), floor), exponent);
  }
  return es.eigenvectors() * vals.asDiagonal() * es.eigenvectors().adjoint();
}

} // namespace

Matrix hermitian_sqrt(const Matrix& m, double floor) {
  return hermitian_power(m, floor, 0.5);
}

Matrix hermitian_inv_sqrt(const Matrix& m, double floor) {
  return hermitian_power(m, floor, -0.5);
}

double max_real_numerical_range(const Matrix& a) {
  const Matrix herm = 0.5 * (a + a.adjoint());
  const RealVector vals = hermitian_eigenvalues(herm);
  return vals(vals.size() - 1);
}

double min_real_numerical_range(const Matrix& a) {
  const Matrix herm = 0.5 * (a + a.adjoint());
  return hermitian_eigenvalues(herm)(0);
}

void sort_by_real(Vector& values) {
  std::sort(values.data(), values.data() + values.size(),
            [](const Complex& x, const Complex& y) {
              if (x.real() != y.real()) return x.real() < y.real();
              return x.imag() < y.imag();
            });
}

double sorted_multiset_distance(const RealVector& a, const RealVector& b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  for (Index i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a(i) - b(i)));
  return worst;
}

double set_distance(const RealVector& a, const RealVector& b) {
  double best = std::numeric_limits<double>::infinity();
  for (Index i = 0; i < a.size(); ++i)
    for (Index j = 0; j < b.size(); ++j)
      best = std::min(best, std::abs(a(i) - b(j)));
  return best;
}

} // namespace krein
