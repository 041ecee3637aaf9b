#include "krein/sylvester.hpp"

#include <cmath>

#include "krein/linalg.hpp"
#include "krein/tolerances.hpp"

namespace krein {

SylvesterResult solve_sylvester(const Matrix& a0, const Matrix& a1, const Matrix& y) {
  if (a0.rows() != a0.cols() || a1.rows() != a1.cols())
    throw Error(ErrorCode::DimensionMismatch, "coefficient blocks must be square");
  if (y.rows() != a1.rows() || y.cols() != a0.rows())
    throw Error(ErrorCode::DimensionMismatch, "y must be n1 x n0");
  if (!is_hermitian(a0, tolerances().hermitian) || !is_hermitian(a1, tolerances().hermitian))
    throw Error(ErrorCode::NotHermitian, "coefficient blocks must be Hermitian");

  Eigen::SelfAdjointEigenSolver<Matrix> es0(a0);
  Eigen::SelfAdjointEigenSolver<Matrix> es1(a1);
  const RealVector lam0 = es0.eigenvalues();
  const RealVector lam1 = es1.eigenvalues();

  Disposition disp;
  try {
    disp = classify_disposition(lam0, lam1);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::SetsIntersect)
      throw Error(ErrorCode::SpectraOverlap, "spec(a0) and spec(a1) intersect");
    throw;
  }
  if (disp.d < tolerances().sylvester_separation)
    throw Error(ErrorCode::IllConditioned, "eigenvalue separation below tolerance");

  const Matrix y_tilde = es1.eigenvectors().adjoint() * y * es0.eigenvectors();
  Matrix x_tilde(y.rows(), y.cols());
  for (Index i = 0; i < y.rows(); ++i)
    for (Index j = 0; j < y.cols(); ++j)
      x_tilde(i, j) = y_tilde(i, j) / (lam0(j) - lam1(i));

  SylvesterResult result;
  result.x = es1.eigenvectors() * x_tilde * es0.eigenvectors().adjoint();
  result.d = disp.d;
  result.residual = (result.x * a0 - a1 * result.x - y).norm();
  result.norm_x = spectral_norm(result.x);
  result.applicable_constant = disp.gap_any() ? 1.0 : M_PI / 2.0;
  return result;
}

double sylvester_bound_rhs(double norm_y, double d, const Disposition& disposition) {
  if (d <= 0.0)
    throw Error(ErrorCode::NonpositiveSeparation, "spectral separation must be positive");
  const double constant = disposition.gap_any() ? 1.0 : M_PI / 2.0;
  return constant * norm_y / d;
}

} // namespace krein
