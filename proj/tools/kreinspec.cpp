// Command-line front end: loads block-matrix instances, runs the
// solve -> angles -> bounds -> enclosure pipeline and emits reports.
//
// Exit codes: 0 success, 1 bound/check violation, 2 input error,
// 3 solver failure.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "krein/angles.hpp"
#include "krein/bounds.hpp"
#include "krein/enclosures.hpp"
#include "krein/ensemble.hpp"
#include "krein/instance_io.hpp"
#include "krein/linalg.hpp"
#include "krein/oscillator.hpp"
#include "krein/report_io.hpp"
#include "krein/riccati.hpp"
#include "krein/tolerances.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInput = 2;
constexpr int kExitSolver = 3;

using nlohmann::json;

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw krein::Error(krein::ErrorCode::InvalidInput, "cannot write " + out_path);
  out << text;
}

bool solver_failure(krein::ErrorCode code) {
  using EC = krein::ErrorCode;
  switch (code) {
    case EC::NonRealSpectrum:
    case EC::NoDefiniteInvariantSubspace:
    case EC::NotAGraph:
    case EC::NotContractive:
    case EC::SpectraOverlap:
    case EC::IllConditioned:
      return true;
    default:
      return false;
  }
}

struct AnalyzeArgs {
  std::string instance_file;
  std::string format = "text";
  std::string out;
  double slack_tol = 1e-8;
};

int run_analyze(const AnalyzeArgs& args) {
  const krein::BlockInstance inst = krein::load_instance(args.instance_file);
  const krein::RiccatiSolution sol = krein::solve_riccati_contractive(inst);
  const krein::AngleReport angles = krein::compute_angle_report(inst, sol);
  const krein::BoundReport bounds = krein::check_bounds(inst, sol, angles);

  std::optional<krein::EnclosureReport> enclosure;
  try {
    enclosure = krein::verify_enclosure(inst);
  } catch (const krein::Error& e) {
    if (e.code() != krein::ErrorCode::HypothesesNotMet) throw;
  }

  std::ostringstream text;
  if (args.format == "json") {
    json j;
    j["solution"] = json::parse(krein::solution_summary_json(sol, angles));
    j["bounds"] = json::parse(krein::bound_report_json(bounds));
    if (enclosure) j["enclosure"] = json::parse(krein::enclosure_report_json(*enclosure));
    text << j.dump(2) << "\n";
  } else if (args.format == "csv") {
    text << krein::bound_report_csv(bounds);
  } else {
    text << "|K| = " << krein::format_double(sol.norm_k)
         << "  residual = " << krein::format_double(sol.residual) << "\n";
    text << "theta0 max = " << krein::format_double(angles.theta0.maxCoeff())
         << "  |tan Theta| = " << krein::format_double(angles.norm_tan)
         << "  |sin 2Theta| = " << krein::format_double(angles.norm_sin2) << "\n";
    text << "d = " << krein::format_double(bounds.d)
         << "  delta0 = " << krein::format_double(bounds.delta0)
         << "  delta1 = " << krein::format_double(bounds.delta1)
         << "  delta_hat = " << krein::format_double(bounds.delta_hat) << "\n";
    text << krein::bound_report_csv(bounds);
    if (enclosure) {
      text << "enclosure r_V = " << krein::format_double(enclosure->r_v)
           << "  all_real = " << (enclosure->all_real ? "true" : "false")
           << "  inclusion_ok = " << (enclosure->inclusion_ok ? "true" : "false") << "\n";
    } else {
      text << "enclosure: inapplicable (hypotheses not met)\n";
    }
  }
  write_output(text.str(), args.out);

  if (!bounds.all_hold(args.slack_tol)) return kExitViolation;
  if (enclosure && !enclosure->inclusion_ok) return kExitViolation;
  return kExitOk;
}

struct GoldenCheck {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  bool pass = false;
};

int run_examples(bool as_json, double tol, const std::string& out) {
  std::vector<GoldenCheck> checks;

  {
    // d = 4, b = 1: |K| attains |B| / dist(sigma0', sigma1).
    const auto inst = krein::golden_two_by_one(4.0, 1.0);
    const auto sol = krein::solve_riccati_contractive(inst);
    const double delta = krein::set_distance(sol.sigma0_prime, krein::RealVector::Zero(1));
    checks.push_back({"two_by_one: |K| = |B|/delta(Z0,A1)", sol.norm_k, 1.0 / delta, false});
  }
  {
    // d = 2, b = 1: |K| attains |B| / sqrt(delta_hat^2 + |B|^2).
    const auto inst = krein::golden_one_by_two(2.0, 1.0);
    const auto sol = krein::solve_riccati_contractive(inst);
    const double delta_hat = krein::set_distance(sol.sigma0_prime, sol.sigma1_prime);
    checks.push_back({"one_by_two: |K| = |B|/sqrt(delta_hat^2+|B|^2)", sol.norm_k,
                      1.0 / std::sqrt(delta_hat * delta_hat + 1.0), false});
  }
  {
    // d = 2, b = 0.6: |tan 2 Theta| attains 2 |B| / delta_hat.
    const auto inst = krein::golden_scalar(2.0, 0.6);
    const auto sol = krein::solve_riccati_contractive(inst);
    const auto angles = krein::compute_angle_report(inst, sol);
    const double delta_hat = krein::set_distance(sol.sigma0_prime, sol.sigma1_prime);
    checks.push_back(
        {"scalar: |tan 2Theta| = 2|B|/delta_hat", angles.norm_tan2, 1.2 / delta_hat, false});
  }

  bool all_pass = true;
  for (auto& check : checks) {
    check.pass = std::abs(check.lhs - check.rhs) <= tol;
    all_pass = all_pass && check.pass;
  }

  std::ostringstream text;
  if (as_json) {
    json j = json::array();
    for (const auto& check : checks) {
      j.push_back({{"name", check.name},
                   {"lhs", check.lhs},
                   {"rhs", check.rhs},
                   {"pass", check.pass}});
    }
    text << j.dump(2) << "\n";
  } else {
    for (const auto& check : checks) {
      text << (check.pass ? "[PASS] " : "[FAIL] ") << check.name
           << "  lhs = " << krein::format_double(check.lhs)
           << "  rhs = " << krein::format_double(check.rhs) << "\n";
    }
    text << (all_pass ? "3/3 equalities hold\n" : "sharp equality violated\n");
  }
  write_output(text.str(), out);
  return all_pass ? kExitOk : kExitViolation;
}

struct EnsembleArgs {
  int trials = 100;
  std::string dims = "4,4";
  bool randomize_dims = false;
  double v_over_d = 0.25;
  std::string disposition = "subordinated";
  std::uint64_t seed = 0;
  std::string out;
  bool allow_gap_only = false;
  double slack_tol = 1e-8;
};

int run_ensemble(const EnsembleArgs& args) {
  krein::EnsembleConfig config;
  config.n_trials = args.trials;
  config.seed = args.seed;
  config.v_over_d = args.v_over_d;
  config.disposition = krein::disposition_class_from_name(args.disposition);
  config.randomize_dims = args.randomize_dims;

  const auto comma = args.dims.find(',');
  if (comma == std::string::npos)
    throw krein::Error(krein::ErrorCode::InvalidInput, "--dims must look like 4,4");
  config.n0 = std::stol(args.dims.substr(0, comma));
  config.n1 = std::stol(args.dims.substr(comma + 1));

  if (args.allow_gap_only) {
    if (config.disposition == krein::DispositionClass::Generic)
      throw krein::Error(krein::ErrorCode::InvalidInput,
                         "--allow-gap-only excludes the generic disposition");
    if (!(args.v_over_d < 0.5))
      throw krein::Error(krein::ErrorCode::InvalidInput, "--v-over-d must be < 1/2");
  } else if (!(args.v_over_d < 1.0 / M_PI)) {
    throw krein::Error(krein::ErrorCode::InvalidInput,
                       "--v-over-d must be < 1/pi (or pass --allow-gap-only)");
  }

  const krein::EnsembleOutcome outcome = krein::run_bound_ensemble(config);
  write_output(outcome.csv, args.out);
  std::cerr << "trials=" << outcome.trials_run
            << " min_slack=" << krein::format_double(outcome.min_slack) << "\n";
  return outcome.min_slack >= -args.slack_tol ? kExitOk : kExitViolation;
}

struct OscillatorArgs {
  double beta = 0.2;
  int m = 64;
  std::string profile = "sin";
  int quad_nodes = 0;
  std::string out;
};

int run_oscillator(const OscillatorArgs& args) {
  if (args.profile != "sin")
    throw krein::Error(krein::ErrorCode::InvalidInput, "only the sin profile is built in");
  const auto model = krein::build_oscillator(args.m, args.beta,
                                             [](double x) { return std::sin(x); },
                                             args.quad_nodes, "sin");
  const auto report = krein::oscillator_report(model);
  write_output(krein::oscillator_report_json(model, report) + "\n", args.out);

  if (report.enclosure_applicable && !(report.real_ok && report.enclosure_ok))
    return kExitViolation;
  if (report.angle_suite_ran && !report.angle_ok) return kExitViolation;
  return kExitOk;
}

struct QnrArgs {
  std::string instance_file;
  int samples = 1000;
  std::uint64_t seed = 0;
  std::string out;
};

int run_qnr(const QnrArgs& args) {
  const krein::BlockInstance inst = krein::load_instance(args.instance_file);
  const krein::QnrSample qnr = krein::sample_qnr(inst, args.samples, args.seed);
  const krein::Vector nr =
      krein::numerical_range_sample(inst.assemble(), args.samples, args.seed + 1);

  Eigen::ComplexEigenSolver<krein::Matrix> es(inst.assemble(), false);
  krein::Vector spectrum = es.eigenvalues();
  krein::sort_by_real(spectrum);

  write_output(krein::point_cloud_csv(qnr, nr, spectrum), args.out);

  if (inst.mode != krein::Mode::JSelfAdjoint) {
    std::cerr << "half-plane check: inapplicable (general mode)\n";
    return kExitOk;
  }
  const bool ok = krein::qnr_halfplane_check(inst, qnr);
  std::cerr << "half-plane check: " << (ok ? "pass" : "FAIL") << "\n";
  return ok ? kExitOk : kExitViolation;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral bounds and reducing subspaces of 2x2 block operator matrices"};
  app.require_subcommand(1);

  AnalyzeArgs analyze_args;
  auto* analyze = app.add_subcommand("analyze", "full pipeline on an instance file");
  analyze->add_option("instance", analyze_args.instance_file, "instance JSON path")->required();
  analyze->add_option("--format", analyze_args.format, "text | json | csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  analyze->add_option("--out", analyze_args.out, "write the report to a file");
  analyze->add_option("--tol", analyze_args.slack_tol, "slack tolerance for bound violations");

  bool examples_json = false;
  double examples_tol = 1e-10;
  std::string examples_out;
  auto* examples = app.add_subcommand("examples", "golden sharp-equality suite");
  examples->add_flag("--json", examples_json, "machine-readable table");
  examples->add_option("--tol", examples_tol, "equality tolerance");
  examples->add_option("--out", examples_out, "write the table to a file");

  EnsembleArgs ensemble_args;
  auto* ensemble = app.add_subcommand("ensemble", "random-instance bound verification, CSV out");
  ensemble->add_option("--trials", ensemble_args.trials, "number of instances")->required();
  ensemble->add_option("--dims", ensemble_args.dims, "n0,n1");
  ensemble->add_flag("--randomize-dims", ensemble_args.randomize_dims,
                     "sample dims in [2,n0] x [2,n1]");
  ensemble->add_option("--v-over-d", ensemble_args.v_over_d, "perturbation-to-distance ratio");
  ensemble->add_option("--disposition", ensemble_args.disposition,
                       "generic | gap | subordinated");
  ensemble->add_option("--seed", ensemble_args.seed, "base seed");
  ensemble->add_option("--out", ensemble_args.out, "CSV output path");
  ensemble->add_flag("--allow-gap-only", ensemble_args.allow_gap_only,
                     "permit v/d up to 1/2 for gap dispositions");
  ensemble->add_option("--tol", ensemble_args.slack_tol, "slack tolerance");

  OscillatorArgs oscillator_args;
  auto* oscillator = app.add_subcommand("oscillator", "truncated oscillator model report");
  oscillator->add_option("--beta", oscillator_args.beta, "coupling strength");
  oscillator->add_option("--m", oscillator_args.m, "number of Hermite modes");
  oscillator->add_option("--profile", oscillator_args.profile, "perturbation profile");
  oscillator->add_option("--quad-nodes", oscillator_args.quad_nodes,
                         "Gauss-Hermite node count (0 = auto)");
  oscillator->add_option("--out", oscillator_args.out, "report output path");

  QnrArgs qnr_args;
  auto* qnr = app.add_subcommand("qnr", "quadratic numerical range point cloud, CSV out");
  qnr->add_option("instance", qnr_args.instance_file, "instance JSON path")->required();
  qnr->add_option("--samples", qnr_args.samples, "number of compressions to sample");
  qnr->add_option("--seed", qnr_args.seed, "base seed");
  qnr->add_option("--out", qnr_args.out, "CSV output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (app.got_subcommand(analyze)) return run_analyze(analyze_args);
    if (app.got_subcommand(examples)) return run_examples(examples_json, examples_tol, examples_out);
    if (app.got_subcommand(ensemble)) return run_ensemble(ensemble_args);
    if (app.got_subcommand(oscillator)) return run_oscillator(oscillator_args);
    if (app.got_subcommand(qnr)) return run_qnr(qnr_args);
  } catch (const krein::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (e.code() == krein::ErrorCode::InvalidInput) return kExitInput;
    return solver_failure(e.code()) ? kExitSolver : kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
