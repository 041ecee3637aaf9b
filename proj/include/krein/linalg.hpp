#pragma once

#include "krein/types.hpp"

namespace krein {

// Small dense helpers shared by the solver modules. Everything is
// value-semantic and pure; matrices are desk scale so SVD/eigensolves are
// used freely.

double spectral_norm(const Matrix& m);
double min_singular_value(const Matrix& m);
double condition_number(const Matrix& m);

bool is_hermitian(const Matrix& m, double rel_tol);
double hermiticity_defect(const Matrix& m);

/// Ascending eigenvalues of a Hermitian matrix.
RealVector hermitian_eigenvalues(const Matrix& m);

/// f(M) for Hermitian positive semidefinite M via eigendecomposition,
/// with eigenvalues floored at `floor` before applying f.
Matrix hermitian_sqrt(const Matrix& m, double floor);
Matrix hermitian_inv_sqrt(const Matrix& m, double floor);

/// Largest eigenvalue of the Hermitian part (A + A*)/2; equals the maximal
/// real part of the numerical range of A.
double max_real_numerical_range(const Matrix& a);
double min_real_numerical_range(const Matrix& a);

/// Sorts a complex eigenvalue list by real part (ties by imaginary part).
void sort_by_real(Vector& values);

/// Hausdorff-style multiset distance between two sorted real lists of equal
/// length: max |a_i - b_i|. Infinity on length mismatch.
double sorted_multiset_distance(const RealVector& a, const RealVector& b);

/// min_{i,j} |a_i - b_j| for two nonempty real lists.
double set_distance(const RealVector& a, const RealVector& b);

} // namespace krein
