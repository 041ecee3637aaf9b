#include <doctest.h>

#include <cmath>
#include <limits>

#include "krein/angles.hpp"
#include "krein/linalg.hpp"
#include "krein/riccati.hpp"
#include "test_helpers.hpp"

using namespace krein;
using test_helpers::scalar;

namespace {
const double kSqrt3 = std::sqrt(3.0);
}

TEST_SUITE("angles") {

TEST_CASE("identical subspaces have zero angles") {
  Rng rng(3);
  const Matrix basis = rng.haar_unitary(4).leftCols(2);
  const Subspace sub = make_subspace(basis);
  const RealVector angles = operator_angle(sub, sub);
  CHECK(angles.maxCoeff() <= 1e-12);
}

TEST_CASE("coordinate line against the diagonal gives pi/4") {
  Matrix e1 = Matrix::Zero(2, 1);
  e1(0, 0) = 1.0;
  Matrix diag(2, 1);
  diag << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  const RealVector angles = operator_angle(make_subspace(e1), make_subspace(diag));
  REQUIRE(angles.size() == 1);
  CHECK(angles(0) == doctest::Approx(M_PI / 4.0).epsilon(1e-12));
}

TEST_CASE("one-by-two sharp instance: theta0 = arctan(1/2) both ways") {
  // |K| = 1/2 so the angle is arctan(0.5); the compression-formula route
  // must agree with the explicitly normalized graph basis.
  const BlockInstance inst = golden_one_by_two(2.0, 1.0);
  const RiccatiSolution sol = solve_riccati_contractive(inst);
  CHECK(sol.norm_k == doctest::Approx(0.5).epsilon(1e-12));

  Matrix h0 = Matrix::Zero(3, 1);
  h0(0, 0) = 1.0;
  Matrix graph(3, 1);
  graph(0, 0) = 1.0;
  graph.block(1, 0, 2, 1) = sol.k;
  graph /= graph.norm();

  const RealVector angles = operator_angle(make_subspace(h0), make_subspace(graph));
  REQUIRE(angles.size() == 1);
  CHECK(angles(0) == doctest::Approx(std::atan(0.5)).epsilon(1e-12));
  CHECK(angles(0) == doctest::Approx(0.4636476090008061).epsilon(1e-12));

  const RealVector from_k = angle_from_angular_operator(sol.k);
  CHECK(test_helpers::max_abs_diff(angles, from_k) <= 1e-12);
}

TEST_CASE("angles from the angular operator") {
  CHECK(angle_from_angular_operator(Matrix::Zero(2, 3)).maxCoeff() == 0.0);

  const RealVector unit = angle_from_angular_operator(scalar(1.0));
  CHECK(unit(0) == doctest::Approx(M_PI / 4.0).epsilon(1e-15));

  // Two-by-one sharp instance: singular values {0, 2 - sqrt(3)}, so the
  // angles are {0, pi/12} (arctan(2 - sqrt(3)) is exactly 15 degrees).
  Matrix k(1, 2);
  k << 0.0, -(2.0 - kSqrt3);
  const RealVector angles = angle_from_angular_operator(k);
  REQUIRE(angles.size() == 2);
  CHECK(angles(0) == doctest::Approx(0.0));
  CHECK(angles(1) == doctest::Approx(std::atan(2.0 - kSqrt3)).epsilon(1e-15));
  CHECK(angles(1) == doctest::Approx(M_PI / 12.0).epsilon(1e-14));
}

TEST_CASE("angle norms at {0, pi/12}, zeros and the pi/4 boundary") {
  RealVector angles(2);
  angles << 0.0, M_PI / 12.0;
  const AngleNorms norms = angle_norms(angles);
  CHECK(norms.tan == doctest::Approx(2.0 - kSqrt3).epsilon(1e-14));
  CHECK(norms.sin2 == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(norms.tan2 == doctest::Approx(1.0 / kSqrt3).epsilon(1e-14));

  const AngleNorms zero = angle_norms(RealVector::Zero(3));
  CHECK(zero.tan == 0.0);
  CHECK(zero.sin2 == 0.0);
  CHECK(zero.tan2 == 0.0);

  RealVector boundary(1);
  boundary << M_PI / 4.0;
  CHECK(angle_norms(boundary).tan2 == std::numeric_limits<double>::infinity());
}

TEST_CASE("sin2 norm is a max over angles, not sin of twice the max") {
  RealVector angles(2);
  angles << M_PI / 4.0, M_PI / 2.5;  // past pi/4, sin(2t) decreases
  const AngleNorms norms = angle_norms(angles);
  CHECK(norms.sin2 == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("report agreement, max-angle symmetry and clamping on random solves") {
  Rng rng(67);
  for (int t = 0; t < 20; ++t) {
    const DispositionClass cls = static_cast<DispositionClass>(t % 3);
    const BlockInstance inst = random_j_instance(
        rng, 2 + static_cast<Index>(rng.uniform() * 3), 2 + static_cast<Index>(rng.uniform() * 3),
        0.3, cls);
    const RiccatiSolution sol = solve_riccati_contractive(inst);
    const AngleReport report = compute_angle_report(inst, sol);

    const RealVector from_k = angle_from_angular_operator(sol.k);
    CHECK(test_helpers::max_abs_diff(report.theta0, from_k) <= 1e-9);
    CHECK(std::abs(report.theta0.maxCoeff() - report.theta1.maxCoeff()) <= 1e-9);
    CHECK(report.theta0.minCoeff() >= 0.0);
    CHECK(report.theta0.maxCoeff() <= M_PI / 2.0);
    CHECK(report.theta0.maxCoeff() < M_PI / 4.0);  // contractive K
    CHECK(report.norm_tan == doctest::Approx(sol.norm_k).epsilon(1e-9));
  }
}

TEST_CASE("missing perturbed directions come out at pi/2") {
  Rng rng(71);
  const Matrix basis = rng.haar_unitary(4);
  const Subspace big = make_subspace(basis.leftCols(2));
  const Subspace small = make_subspace(basis.col(0));
  const RealVector angles = operator_angle(big, small);
  REQUIRE(angles.size() == 2);
  CHECK(angles(0) == doctest::Approx(0.0));
  CHECK(angles(1) == doctest::Approx(M_PI / 2.0));
}

} // TEST_SUITE("angles")
