#include <doctest.h>

#include <cmath>
#include <optional>
#include <vector>

#include <unsupported/Eigen/MatrixFunctions>

#include "krein/angles.hpp"
#include "krein/linalg.hpp"
#include "krein/riccati.hpp"
#include "test_helpers.hpp"

using namespace krein;
using test_helpers::scalar;

namespace {

const double kSqrt3 = std::sqrt(3.0);

// Brute-force oracle for small instances: try every eigenvector subset of
// size n0 as the candidate invariant subspace, read off K, keep the unique
// contraction whose graph is uniformly positive.
std::optional<Matrix> brute_force_contractive_k(const BlockInstance& inst) {
  Eigen::ComplexEigenSolver<Matrix> es(inst.assemble());
  const Index n = inst.dim();
  const KreinSignature sig = KreinSignature::of(inst);
  std::optional<Matrix> found;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != inst.n0) continue;
    Matrix basis(n, inst.n0);
    Index col = 0;
    for (Index i = 0; i < n; ++i)
      if (mask & (1u << i)) basis.col(col++) = es.eigenvectors().col(i);
    const Matrix x0 = basis.topRows(inst.n0);
    if (condition_number(x0) > 1e10) continue;
    const Matrix k = basis.bottomRows(inst.n1) * x0.inverse();
    if (spectral_norm(k) >= 1.0) continue;
    if (definiteness_margin(span_subspace(basis), sig) <= 0.0) continue;
    REQUIRE(!found.has_value());  // uniqueness of the contractive solution
    found = k;
  }
  return found;
}

BlockInstance random_solvable(Rng& rng, int t) {
  const DispositionClass cls = static_cast<DispositionClass>(t % 3);
  const Index n0 = 2 + static_cast<Index>(rng.uniform() * 3);
  const Index n1 = 2 + static_cast<Index>(rng.uniform() * 3);
  return random_j_instance(rng, n0, n1, 0.25, cls);
}

} // namespace

TEST_SUITE("riccati") {

TEST_CASE("two-by-one sharp instance: closed form against the pairing oracle") {
  // d = 4, b = 1: the contractive solution is (0, -kappa) with
  // kappa = b / (d/2 + sqrt(d^2/4 - b^2)) = 2 - sqrt(3).
  const BlockInstance inst = golden_two_by_one(4.0, 1.0);
  const double kappa = 1.0 / (2.0 + kSqrt3);
  CHECK(kappa == doctest::Approx(2.0 - kSqrt3).epsilon(1e-15));

  const auto oracle = brute_force_contractive_k(inst);
  REQUIRE(oracle.has_value());
  CHECK(spectral_norm(*oracle) == doctest::Approx(kappa).epsilon(1e-12));

  const RiccatiSolution sol = solve_riccati_contractive(inst);
  CHECK(sol.norm_k == doctest::Approx(kappa).epsilon(1e-12));
  CHECK(std::abs(sol.k(0, 0)) <= 1e-12);
  CHECK(sol.k(0, 1).real() == doctest::Approx(-kappa).epsilon(1e-12));
  CHECK(std::abs(sol.k(0, 1).imag()) <= 1e-12);

  // Perturbed components: spec(Z0) = {-d, d/2 + sqrt(d^2/4 - b^2)}.
  REQUIRE(sol.sigma0_prime.size() == 2);
  CHECK(sol.sigma0_prime(0) == doctest::Approx(-4.0).epsilon(1e-12));
  CHECK(sol.sigma0_prime(1) == doctest::Approx(2.0 + kSqrt3).epsilon(1e-12));
  CHECK(sol.sigma1_prime(0) == doctest::Approx(2.0 - kSqrt3).epsilon(1e-12));
}

TEST_CASE("scalar sharp instance: quadratic-formula oracle") {
  // d = 2, b = 0.6: K solves b K^2 - d K + b = 0; the contractive root is
  // (d - sqrt(d^2 - 4 b^2)) / (2 b) = 1/3, and Z0 = -0.8, Z1 = 0.8.
  const double d = 2.0, b = 0.6;
  const double root = (d - std::sqrt(d * d - 4.0 * b * b)) / (2.0 * b);
  CHECK(root == doctest::Approx(1.0 / 3.0).epsilon(1e-15));

  const BlockInstance inst = golden_scalar(d, b);
  const RiccatiSolution sol = solve_riccati_contractive(inst);
  CHECK(sol.norm_k == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(sol.z0(0, 0).real() == doctest::Approx(-0.8).epsilon(1e-12));
  CHECK(sol.z1(0, 0).real() == doctest::Approx(0.8).epsilon(1e-12));
}

TEST_CASE("zero perturbation gives the trivial solution") {
  Matrix a0 = Matrix::Zero(2, 2);
  a0(0, 0) = -1.0;
  a0(1, 1) = 2.0;
  const BlockInstance inst =
      build_instance(a0, scalar(0.5), Matrix::Zero(2, 1), std::nullopt, Mode::JSelfAdjoint);
  const RiccatiSolution sol = solve_riccati_contractive(inst);
  CHECK(sol.k.norm() == 0.0);
  CHECK((sol.t - Matrix::Identity(3, 3)).norm() == 0.0);
  CHECK((sol.lambda0 - inst.a0).norm() == 0.0);
  CHECK((sol.lambda1 - inst.a1).norm() == 0.0);
}

TEST_CASE("riccati_residual on exact, zero and perturbed solutions") {
  const BlockInstance inst = golden_two_by_one(4.0, 1.0);
  Matrix k(1, 2);
  k << 0.0, -(2.0 - kSqrt3);
  CHECK(riccati_residual(k, inst) <= 1e-12);

  const Matrix zero = Matrix::Zero(1, 2);
  CHECK(riccati_residual(zero, inst) ==
        doctest::Approx(inst.b.adjoint().norm()).epsilon(1e-15));

  Rng rng(5);
  Matrix noise = 1e-6 * rng.gaussian_matrix(1, 2);
  const double res = riccati_residual(k + noise, inst);
  CHECK(res >= 1e-8);   // order of magnitude only
  CHECK(res <= 1e-4);
}

TEST_CASE("dual solution solves the adjoint equation") {
  {
    const BlockInstance inst = golden_two_by_one(4.0, 1.0);
    const RiccatiSolution sol = solve_riccati_contractive(inst);
    CHECK(dual_riccati_residual(dual_solution(sol.k), inst) <= 1e-12);
  }
  {
    Matrix a0 = Matrix::Zero(2, 2);
    a0(0, 0) = 1.0;
    a0(1, 1) = -1.0;
    const BlockInstance inst =
        build_instance(a0, scalar(4.0), Matrix::Zero(2, 1), std::nullopt, Mode::JSelfAdjoint);
    CHECK(dual_riccati_residual(Matrix::Zero(2, 1), inst) == 0.0);
  }
  {
    // One-by-two configuration: K = (-b, b)^T / (sqrt(2) d) solves the
    // original equation, so K* solves the adjoint one.
    const double d = 2.0, b = 1.0;
    const BlockInstance inst = golden_one_by_two(d, b);
    Matrix k(2, 1);
    k << Complex(-b / (std::sqrt(2.0) * d)), Complex(b / (std::sqrt(2.0) * d));
    CHECK(riccati_residual(k, inst) <= 1e-12);
    CHECK(dual_riccati_residual(dual_solution(k), inst) <= 1e-12);
  }
}

TEST_CASE("transformed equation residuals") {
  {
    const BlockInstance inst = golden_scalar(2.0, 0.6);
    const RiccatiSolution sol = solve_riccati_contractive(inst);
    CHECK(transformed_riccati_residual(sol, inst) <= 1e-12);
  }
  {
    Matrix a0 = Matrix::Zero(2, 2);
    a0(0, 0) = -1.0;
    a0(1, 1) = 1.0;
    const BlockInstance inst =
        build_instance(a0, scalar(5.0), Matrix::Zero(2, 1), std::nullopt, Mode::JSelfAdjoint);
    const RiccatiSolution sol = solve_riccati_contractive(inst);
    CHECK(transformed_riccati_residual(sol, inst) == 0.0);
  }
  {
    Rng rng(41);
    for (int t = 0; t < 10; ++t) {
      const BlockInstance inst = random_solvable(rng, t);
      const RiccatiSolution sol = solve_riccati_contractive(inst);
      const double scale = spectral_norm(inst.b) * (1.0 + sol.norm_k) * (1.0 + sol.norm_k);
      CHECK(transformed_riccati_residual(sol, inst) <= 1e-9 * (1.0 + scale));
    }
  }
}

TEST_CASE("operator-function commutation for phi(z) = sqrt(1 - z)") {
  Rng rng(43);
  for (int t = 0; t < 25; ++t) {
    const Index n0 = 1 + static_cast<Index>(rng.uniform() * 4);
    const Index n1 = 1 + static_cast<Index>(rng.uniform() * 4);
    Matrix m = rng.gaussian_matrix(n0, n1);
    Matrix n = rng.gaussian_matrix(n1, n0);
    const double reach = std::max(spectral_norm(m * n), spectral_norm(n * m));
    const double shrink = std::sqrt(0.9 / std::max(reach, 1e-12)) * rng.uniform(0.3, 1.0);
    m *= shrink;
    n *= shrink;

    const Matrix phi_nm = Matrix(Matrix::Identity(n1, n1) - n * m).sqrt();
    const Matrix phi_mn = Matrix(Matrix::Identity(n0, n0) - m * n).sqrt();
    CHECK((m * phi_nm - phi_mn * m).norm() <= 1e-10);
  }
}

TEST_CASE("square-root commutation holds for every computed K") {
  Rng rng(47);
  for (int t = 0; t < 12; ++t) {
    const BlockInstance inst = random_solvable(rng, t);
    const RiccatiSolution sol = solve_riccati_contractive(inst);
    const Matrix s0 = hermitian_sqrt(
        Matrix(Matrix::Identity(inst.n0, inst.n0) - sol.k.adjoint() * sol.k), 1e-14);
    const Matrix s1 = hermitian_sqrt(
        Matrix(Matrix::Identity(inst.n1, inst.n1) - sol.k * sol.k.adjoint()), 1e-14);
    CHECK((s1 * sol.k - sol.k * s0).norm() <= 1e-10);
  }
}

TEST_CASE("diagonalization invariants on random solvable instances") {
  Rng rng(53);
  for (int t = 0; t < 30; ++t) {
    const BlockInstance inst = random_solvable(rng, t);
    const RiccatiSolution sol = solve_riccati_contractive(inst);
    const Matrix l = inst.assemble();

    CHECK(sol.norm_k < 1.0);
    CHECK(sol.residual <=
          1e-9 * spectral_norm(inst.b) * (1.0 + sol.norm_k) * (1.0 + sol.norm_k));

    Matrix lambda = Matrix::Zero(inst.dim(), inst.dim());
    lambda.topLeftCorner(inst.n0, inst.n0) = sol.lambda0;
    lambda.bottomRightCorner(inst.n1, inst.n1) = sol.lambda1;
    CHECK((l - sol.t * lambda * sol.t_inv).norm() <= 1e-8 * l.norm());

    CHECK(hermiticity_defect(sol.lambda0) <= 1e-9 * (1.0 + sol.lambda0.norm()));
    CHECK(hermiticity_defect(sol.lambda1) <= 1e-9 * (1.0 + sol.lambda1.norm()));

    // spec(Z_i) = spec(Lambda_i) as multisets.
    Eigen::ComplexEigenSolver<Matrix> es0(sol.z0, false);
    Vector z0_eigs = es0.eigenvalues();
    sort_by_real(z0_eigs);
    const RealVector lam0 = hermitian_eigenvalues(0.5 * (sol.lambda0 + sol.lambda0.adjoint()));
    CHECK(test_helpers::max_abs_diff(z0_eigs.real(), lam0) <= 1e-8);
    CHECK(test_helpers::max_abs_diff(lam0, sol.sigma0_prime) <= 1e-8);
  }
}

TEST_CASE("perturbed graph subspaces reduce L and are Krein-orthogonal") {
  Rng rng(59);
  for (int t = 0; t < 12; ++t) {
    const BlockInstance inst = random_solvable(rng, t);
    const RiccatiSolution sol = solve_riccati_contractive(inst);
    const KreinSignature sig = KreinSignature::of(inst);
    const Matrix l = inst.assemble();
    const Matrix id = Matrix::Identity(inst.dim(), inst.dim());

    const Subspace pos = graph_subspace(sol.k, sig);
    const Subspace neg = graph_subspace(Matrix(sol.k.adjoint()), sig, GraphOver::Second);
    const Matrix p_pos = pos.basis * pos.basis.adjoint();
    const Matrix p_neg = neg.basis * neg.basis.adjoint();
    CHECK(((id - p_pos) * l * p_pos).norm() <= 1e-9 * l.norm());
    CHECK(((id - p_neg) * l * p_neg).norm() <= 1e-9 * l.norm());

    const Matrix cross = pos.basis.adjoint() * sig.matrix() * neg.basis;
    CHECK(cross.norm() <= 1e-9);

    CHECK(definiteness_margin(pos, sig) > 0.0);
    CHECK(definite_extremes(neg, sig).second < 0.0);
  }
}

TEST_CASE("re-solving from the returned partition reproduces K") {
  Rng rng(61);
  for (int t = 0; t < 10; ++t) {
    const BlockInstance inst = random_solvable(rng, t);
    const RiccatiSolution sol = solve_riccati_contractive(inst);
    const RiccatiSolution again =
        solve_riccati_with_partition(inst, sol.sigma0_prime, sol.sigma1_prime);
    CHECK((sol.k - again.k).norm() <= 1e-10);
  }
}

TEST_CASE("nonreal spectrum is rejected") {
  // a0 = -1/2, a1 = 1/2, b = 0.8: eigenvalues are +/- i sqrt(0.39).
  const BlockInstance inst = golden_scalar(1.0, 0.8);
  CHECK_THROWS_WITH_AS(solve_riccati_contractive(inst), doctest::Contains("NonRealSpectrum"),
                       Error);
}

TEST_CASE("general mode is rejected") {
  const BlockInstance inst = build_instance(scalar(0.0), scalar(1.0), scalar(0.1),
                                            Matrix(scalar(0.2)), Mode::General);
  CHECK_THROWS_WITH_AS(solve_riccati_contractive(inst), doctest::Contains("HypothesesNotMet"),
                       Error);
}

} // TEST_SUITE("riccati")
