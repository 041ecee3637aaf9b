#include "krein/ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include "krein/angles.hpp"
#include "krein/bounds.hpp"
#include "krein/linalg.hpp"
#include "krein/report_io.hpp"
#include "krein/riccati.hpp"

namespace krein {

BlockInstance golden_two_by_one(double d, double b) {
  Matrix a0 = Matrix::Zero(2, 2);
  a0(0, 0) = -d;
  a0(1, 1) = d;
  const Matrix a1 = Matrix::Zero(1, 1);
  Matrix off(2, 1);
  off << Complex(0.0), Complex(b);
  return build_instance(a0, a1, off, std::nullopt, Mode::JSelfAdjoint);
}

BlockInstance golden_one_by_two(double d, double b) {
  const Matrix a0 = Matrix::Zero(1, 1);
  Matrix a1 = Matrix::Zero(2, 2);
  a1(0, 0) = -d;
  a1(1, 1) = d;
  Matrix off(1, 2);
  off << Complex(b / std::sqrt(2.0)), Complex(b / std::sqrt(2.0));
  return build_instance(a0, a1, off, std::nullopt, Mode::JSelfAdjoint);
}

BlockInstance golden_scalar(double d, double b) {
  const Matrix a0 = Matrix::Constant(1, 1, Complex(-d / 2.0));
  const Matrix a1 = Matrix::Constant(1, 1, Complex(d / 2.0));
  const Matrix off = Matrix::Constant(1, 1, Complex(b));
  return build_instance(a0, a1, off, std::nullopt, Mode::JSelfAdjoint);
}

DispositionClass disposition_class_from_name(const std::string& name) {
  if (name == "generic") return DispositionClass::Generic;
  if (name == "gap") return DispositionClass::Gap;
  if (name == "subordinated") return DispositionClass::Subordinated;
  throw Error(ErrorCode::InvalidInput, "disposition must be generic, gap or subordinated");
}

const char* disposition_class_name(DispositionClass cls) {
  switch (cls) {
    case DispositionClass::Generic: return "generic";
    case DispositionClass::Gap: return "gap";
    case DispositionClass::Subordinated: return "subordinated";
  }
  return "?";
}

namespace {

RealVector sorted(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  return Eigen::Map<RealVector>(v.data(), static_cast<Index>(v.size()));
}

Matrix conjugated_spectrum(Rng& rng, const RealVector& spectrum) {
  const Index n = spectrum.size();
  const Matrix u = rng.haar_unitary(n);
  Matrix a = u * spectrum.cast<Complex>().asDiagonal() * u.adjoint();
  return 0.5 * (a + Matrix(a.adjoint()));  // strip conjugation roundoff
}

} // namespace

BlockInstance random_j_instance(Rng& rng, Index n0, Index n1, double v_over_d,
                                DispositionClass cls) {
  if (n0 < 1 || n1 < 1) throw Error(ErrorCode::InvalidInput, "dims must be >= 1");
  if (cls == DispositionClass::Gap && n0 < 2)
    throw Error(ErrorCode::InvalidInput, "gap disposition needs n0 >= 2");
  if (cls == DispositionClass::Generic && (n0 < 2 || n1 < 2))
    throw Error(ErrorCode::InvalidInput, "generic disposition needs n0, n1 >= 2");

  std::vector<double> s0, s1;
  switch (cls) {
    case DispositionClass::Subordinated:
      // sigma0 entirely below sigma1, separated by at least 1.
      for (Index i = 0; i < n0; ++i) s0.push_back(rng.uniform(-2.0, -0.5));
      for (Index i = 0; i < n1; ++i) s1.push_back(rng.uniform(0.5, 2.0));
      break;
    case DispositionClass::Gap:
      // sigma1 inside a finite gap of sigma0.
      for (Index i = 0; i < n1; ++i) s1.push_back(rng.uniform(-0.5, 0.5));
      s0.push_back(rng.uniform(-3.0, -1.5));
      s0.push_back(rng.uniform(1.5, 3.0));
      for (Index i = 2; i < n0; ++i)
        s0.push_back(rng.uniform() < 0.5 ? rng.uniform(-3.0, -1.5) : rng.uniform(1.5, 3.0));
      break;
    case DispositionClass::Generic:
      // Interlaced bands: each hull contains points of the other set.
      s0.push_back(rng.uniform(0.0, 1.0));
      s0.push_back(rng.uniform(4.0, 5.0));
      s1.push_back(rng.uniform(2.0, 3.0));
      s1.push_back(rng.uniform(6.0, 7.0));
      for (Index i = 2; i < n0; ++i)
        s0.push_back(rng.uniform() < 0.5 ? rng.uniform(0.0, 1.0) : rng.uniform(4.0, 5.0));
      for (Index i = 2; i < n1; ++i)
        s1.push_back(rng.uniform() < 0.5 ? rng.uniform(2.0, 3.0) : rng.uniform(6.0, 7.0));
      break;
  }

  const RealVector spec0 = sorted(std::move(s0));
  const RealVector spec1 = sorted(std::move(s1));
  const double d = set_distance(spec0, spec1);

  const Matrix a0 = conjugated_spectrum(rng, spec0);
  const Matrix a1 = conjugated_spectrum(rng, spec1);
  Matrix b = rng.gaussian_matrix(n0, n1);
  const double target = v_over_d * d;
  const double current = spectral_norm(b);
  b = (current > 0.0 && target > 0.0) ? Matrix(b * (target / current))
                                      : Matrix(Matrix::Zero(n0, n1));
  return build_instance(a0, a1, b, std::nullopt, Mode::JSelfAdjoint);
}

BlockInstance random_general_instance(Rng& rng, Index n0, Index n1, double ratio) {
  if (n0 < 1 || n1 < 1) throw Error(ErrorCode::InvalidInput, "dims must be >= 1");
  if (!(ratio < 0.5)) throw Error(ErrorCode::InvalidInput, "ratio must be < 1/2");
  const Index n = n0 + n1;

  // Alternate the two blocks along a unit-spaced jittered grid. The minimal
  // pairwise eigenvalue distance then equals the block distance d, so the
  // enclosure neighbourhoods are pairwise disjoint and each holds exactly
  // one eigenvalue.
  std::vector<double> s0, s1;
  for (Index k = 0; k < n; ++k) {
    const double value = static_cast<double>(k) + rng.uniform(-0.1, 0.1);
    const bool to_first = (k % 2 == 0) ? (static_cast<Index>(s0.size()) < n0)
                                       : (static_cast<Index>(s1.size()) >= n1);
    if (to_first) {
      s0.push_back(value);
    } else {
      s1.push_back(value);
    }
  }
  const RealVector spec0 = sorted(std::move(s0));
  const RealVector spec1 = sorted(std::move(s1));
  const double d = set_distance(spec0, spec1);

  const RealMatrix o0 = rng.haar_orthogonal(n0);
  const RealMatrix o1 = rng.haar_orthogonal(n1);
  RealMatrix a0r = o0 * spec0.asDiagonal() * o0.transpose();
  RealMatrix a1r = o1 * spec1.asDiagonal() * o1.transpose();
  a0r = 0.5 * (a0r + a0r.transpose()).eval();
  a1r = 0.5 * (a1r + a1r.transpose()).eval();

  RealMatrix br = rng.real_gaussian_matrix(n0, n1);
  RealMatrix cr = rng.real_gaussian_matrix(n1, n0);
  const double target = ratio * d;
  const double nb = spectral_norm(br.cast<Complex>());
  const double nc = spectral_norm(cr.cast<Complex>());
  if (nb > 0.0) br *= target / nb;
  if (nc > 0.0) cr *= target / nc;

  return build_instance(a0r.cast<Complex>(), a1r.cast<Complex>(), br.cast<Complex>(),
                        Matrix(cr.cast<Complex>()), Mode::General);
}

EnsembleOutcome run_bound_ensemble(const EnsembleConfig& config) {
  EnsembleOutcome outcome;
  outcome.min_slack = std::numeric_limits<double>::infinity();

  std::ostringstream csv;
  csv << "trial,n0,n1,d,norm_v,bound_id,applicable,lhs,rhs,slack\n";
  for (int trial = 0; trial < config.n_trials; ++trial) {
    Rng rng(config.seed + static_cast<std::uint64_t>(trial));
    Index n0 = config.n0;
    Index n1 = config.n1;
    if (config.randomize_dims) {
      n0 = 2 + static_cast<Index>(rng.uniform() * static_cast<double>(config.n0 - 1));
      n1 = 2 + static_cast<Index>(rng.uniform() * static_cast<double>(config.n1 - 1));
      n0 = std::min(n0, config.n0);
      n1 = std::min(n1, config.n1);
    }
    const BlockInstance inst =
        random_j_instance(rng, n0, n1, config.v_over_d, config.disposition);
    const RiccatiSolution sol = solve_riccati_contractive(inst);
    const AngleReport angles = compute_angle_report(inst, sol);
    const BoundReport report = check_bounds(inst, sol, angles);

    for (const auto& rec : report.records) {
      csv << trial << ',' << n0 << ',' << n1 << ',' << format_double(report.d) << ','
          << format_double(report.norm_v) << ',' << rec.bound_id << ','
          << (rec.applicable ? "true" : "false") << ',';
      if (rec.applicable) {
        csv << format_double(rec.lhs) << ',' << format_double(rec.rhs) << ','
            << format_double(rec.slack);
        outcome.min_slack = std::min(outcome.min_slack, rec.slack);
      } else {
        csv << ",,";
      }
      csv << '\n';
    }
    ++outcome.trials_run;
  }
  outcome.csv = csv.str();
  return outcome;
}

} // namespace krein
