#include <doctest.h>

#include <cmath>

#include "krein/linalg.hpp"
#include "krein/oscillator.hpp"
#include "test_helpers.hpp"

using namespace krein;

namespace {

double sin_profile(double x) { return std::sin(x); }

// Quadrature of psi_a * f * psi_b over the Gaussian-stripped polynomials,
// summed over mirror node pairs (independent re-implementation for parity
// and orthonormality checks).
double quad_pair(const GaussHermiteRule& rule, const RealMatrix& h, int a, int b,
                 const std::function<double(double)>& f) {
  const Index n = rule.nodes.size();
  double sum = 0.0;
  for (Index i = 0, j = n - 1; i <= j; ++i, --j) {
    const double low = rule.weights(i) * h(i, a) * f(rule.nodes(i)) * h(i, b);
    if (i == j) {
      sum += low;
    } else {
      sum += low + rule.weights(j) * h(j, a) * f(rule.nodes(j)) * h(j, b);
    }
  }
  return sum;
}

} // namespace

TEST_SUITE("oscillator") {

TEST_CASE("level multiplicities are binomial coefficients") {
  for (int n = 0; n < 12; ++n) CHECK(multiplicity(n, 1) == 1);
  CHECK(multiplicity(0, 3) == 1);
  CHECK(multiplicity(2, 3) == 6);   // binomial(4, 2)
  CHECK(multiplicity(5, 2) == 6);   // binomial(6, 5)
  CHECK(multiplicity(3, 4) == 20);  // binomial(6, 3)
}

TEST_CASE("quadrature rule integrates low moments exactly") {
  const GaussHermiteRule rule = gauss_hermite(40);
  double mass = 0.0, second = 0.0;
  for (Index i = 0; i < rule.nodes.size(); ++i) {
    mass += rule.weights(i);
    second += rule.weights(i) * rule.nodes(i) * rule.nodes(i);
  }
  CHECK(mass == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-14));
  CHECK(second == doctest::Approx(std::sqrt(M_PI) / 2.0).epsilon(1e-13));
  // Symmetrized nodes.
  for (Index i = 0; i < rule.nodes.size() / 2; ++i)
    CHECK(rule.nodes(i) == -rule.nodes(rule.nodes.size() - 1 - i));
}

TEST_CASE("hermite function point values") {
  RealVector points(2);
  points << 0.0, 1.0;
  const RealMatrix psi = hermite_functions(points, 3);
  CHECK(psi(0, 0) == doctest::Approx(std::pow(M_PI, -0.25)).epsilon(1e-15));
  CHECK(psi(0, 0) == doctest::Approx(0.7511255444649425).epsilon(1e-14));
  CHECK(psi(0, 1) == 0.0);  // odd function at the origin
  // psi_1(1) = sqrt(2) * 1 * psi_0(1).
  CHECK(psi(1, 1) == doctest::Approx(std::sqrt(2.0) * psi(1, 0)).epsilon(1e-14));
}

TEST_CASE("quadrature Gram matrix of the first 32 modes is the identity") {
  const int m = 32;
  const GaussHermiteRule rule = gauss_hermite(4 * m + 50);
  const RealMatrix psi = hermite_functions(rule.nodes, m);
  // Plain-function weights w e^{x^2} pair with psi_a psi_b.
  RealMatrix h(rule.nodes.size(), m);
  for (Index k = 0; k < rule.nodes.size(); ++k)
    for (int a = 0; a < m; ++a) h(k, a) = psi(k, a);
  GaussHermiteRule plain = rule;
  for (Index k = 0; k < rule.nodes.size(); ++k)
    plain.weights(k) = rule.weights(k) * std::exp(rule.nodes(k) * rule.nodes(k));
  double worst = 0.0;
  for (int a = 0; a < m; ++a) {
    for (int b = a; b < m; ++b) {
      const double value = quad_pair(plain, h, a, b, [](double) { return 1.0; });
      worst = std::max(worst, std::abs(value - (a == b ? 1.0 : 0.0)));
    }
  }
  CHECK(worst <= 1e-10);
}

TEST_CASE("coupling element <psi_0 | sin | psi_1> matches the Gaussian integral") {
  const OscillatorModel model = build_oscillator(8, 1.0, sin_profile, 0);
  const double exact = std::exp(-0.25) / std::sqrt(2.0);
  CHECK(exact == doctest::Approx(0.5506953149031837).epsilon(1e-15));
  CHECK(model.instance.b(0, 0).real() == doctest::Approx(0.0));
  CHECK(model.instance.b(0, 0).imag() == doctest::Approx(exact).epsilon(1e-12));
}

TEST_CASE("same-parity matrix elements vanish identically") {
  const GaussHermiteRule rule = gauss_hermite(178);
  const RealMatrix h = hermite_functions(rule.nodes, 6);
  GaussHermiteRule plain = rule;
  for (Index k = 0; k < rule.nodes.size(); ++k)
    plain.weights(k) = rule.weights(k) * std::exp(rule.nodes(k) * rule.nodes(k));
  for (int a = 0; a < 6; ++a)
    for (int b = a % 2; b < 6; b += 2)
      CHECK(std::abs(quad_pair(plain, h, a, b, sin_profile)) <= 1e-14);
}

TEST_CASE("builder validates the profile and the model structure") {
  CHECK_THROWS_WITH_AS(build_oscillator(8, 0.2, [](double x) { return std::cos(x); }, 0),
                       doctest::Contains("ProfileNotOdd"), Error);
  // A discontinuous odd profile cannot pass the node-doubling certificate.
  CHECK_THROWS_WITH_AS(
      build_oscillator(8, 0.2, [](double x) { return x > 0 ? 1.0 : (x < 0 ? -1.0 : 0.0); }, 0),
      doctest::Contains("QuadratureUnconverged"), Error);

  const OscillatorModel model = build_oscillator(16, 0.2, sin_profile, 0);
  CHECK(model.instance.n0 == 8);
  CHECK(model.instance.n1 == 8);
  for (Index i = 0; i < model.instance.n0; ++i)
    CHECK(model.instance.a0(i, i).real() == doctest::Approx(2.0 * i + 0.5));
  for (Index i = 0; i < model.instance.n1; ++i)
    CHECK(model.instance.a1(i, i).real() == doctest::Approx(2.0 * i + 1.5));
  // Perturbation block is i times a real matrix.
  for (Index i = 0; i < model.instance.n0; ++i)
    for (Index j = 0; j < model.instance.n1; ++j)
      CHECK(model.instance.b(i, j).real() == 0.0);
  CHECK(model.norm_v_trunc <= 0.2 + 1e-10);
}

TEST_CASE("zero coupling keeps the unperturbed levels") {
  const OscillatorModel model = build_oscillator(12, 0.0, sin_profile, 0);
  CHECK(model.norm_v_trunc == 0.0);
  const OscillatorReport report = oscillator_report(model);
  CHECK(report.real_ok);
  CHECK(report.enclosure_ok);
  CHECK(report.max_interior_dist <= 1e-12);
  for (Index i = 0; i < report.eigenvalue_re.size(); ++i)
    CHECK(report.eigenvalue_re(i) == doctest::Approx(i + 0.5).epsilon(1e-12));
}

TEST_CASE("truncated perturbation norm grows with the truncation and stays below beta") {
  double previous = 0.0;
  for (int m : {8, 16, 32}) {
    const OscillatorModel model = build_oscillator(m, 0.2, sin_profile, 0);
    CHECK(model.norm_v_trunc <= 0.2 + 1e-10);
    CHECK(model.norm_v_trunc >= previous - 1e-12);
    previous = model.norm_v_trunc;
  }
}

TEST_CASE("report at beta = 0.2 with 32 modes") {
  const OscillatorModel model = build_oscillator(32, 0.2, sin_profile, 0);
  const OscillatorReport report = oscillator_report(model);
  CHECK(report.real_ok);
  CHECK(report.enclosure_applicable);
  CHECK(report.enclosure_ok);
  CHECK(report.angle_suite_ran);
  CHECK(report.angle_ok);
  CHECK(report.norm_tan_theta <= report.angle_bound_rhs + 1e-9);

  // Interior clusters carry exactly one eigenvalue (dimension-one levels).
  std::vector<int> count(40, 0);
  for (Index i = 0; i < report.eigenvalue_re.size(); ++i)
    count[static_cast<std::size_t>(report.cluster[i])]++;
  for (int n = 0; n <= 16; ++n) CHECK(count[static_cast<std::size_t>(n)] == 1);
}

TEST_CASE("strong coupling reports observations without asserting") {
  const OscillatorModel model = build_oscillator(16, 0.6, sin_profile, 0);
  const OscillatorReport report = oscillator_report(model);
  CHECK_FALSE(report.enclosure_applicable);  // norm above 1/2
  CHECK_FALSE(report.angle_suite_ran);       // norm above 1/pi
}

} // TEST_SUITE("oscillator")
