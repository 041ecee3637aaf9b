#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include "krein/ensemble.hpp"
#include "krein/instance_io.hpp"
#include "krein/report_io.hpp"
#include "test_helpers.hpp"

using namespace krein;

TEST_SUITE("io") {

TEST_CASE("instance JSON round trip is exact") {
  Rng rng(7);
  const BlockInstance inst = random_j_instance(rng, 3, 2, 0.25, DispositionClass::Gap);
  const BlockInstance back = instance_from_json_text(instance_to_json_text(inst));
  CHECK((inst.a0 - back.a0).norm() == 0.0);
  CHECK((inst.a1 - back.a1).norm() == 0.0);
  CHECK((inst.b - back.b).norm() == 0.0);
  CHECK((inst.c - back.c).norm() == 0.0);
  CHECK(back.mode == Mode::JSelfAdjoint);

  const BlockInstance general = random_general_instance(rng, 2, 2, 0.3);
  const BlockInstance back2 = instance_from_json_text(instance_to_json_text(general));
  CHECK((general.c - back2.c).norm() == 0.0);
  CHECK(back2.mode == Mode::General);
}

TEST_CASE("instance JSON rejects malformed input") {
  CHECK_THROWS_WITH_AS(instance_from_json_text("{ not json"), doctest::Contains("InvalidInput"),
                       Error);
  CHECK_THROWS_AS(instance_from_json_text("{\"n0\": 1, \"n1\": 1, \"mode\": \"bogus\"}"), Error);
  // Complex entries must be [re, im] pairs.
  CHECK_THROWS_AS(instance_from_json_text(R"({"n0":1,"n1":1,"mode":"j_self_adjoint",
      "a0":[[1.0]],"a1":[[[0,0]]],"b":[[[0,0]]]})"),
                  Error);
  // c is constructed, not supplied, in j mode.
  CHECK_THROWS_AS(instance_from_json_text(R"({"n0":1,"n1":1,"mode":"j_self_adjoint",
      "a0":[[[0,0]]],"a1":[[[1,0]]],"b":[[[0.1,0]]],"c":[[[0,0]]]})"),
                  Error);
}

TEST_CASE("doubles survive the 17-digit format") {
  Rng rng(11);
  for (int t = 0; t < 200; ++t) {
    const double x = rng.gaussian() * std::pow(10.0, rng.uniform(-12.0, 12.0));
    const double back = std::strtod(format_double(x).c_str(), nullptr);
    CHECK(back == x);
  }
}

TEST_CASE("bound report CSV carries the fixed header") {
  const BlockInstance inst = golden_scalar(2.0, 0.6);
  const RiccatiSolution sol = solve_riccati_contractive(inst);
  const AngleReport angles = compute_angle_report(inst, sol);
  const std::string csv = bound_report_csv(check_bounds(inst, sol, angles));
  std::istringstream stream(csv);
  std::string header;
  std::getline(stream, header);
  CHECK(header == "bound_id,applicable,lhs,rhs,slack");
  int rows = 0;
  for (std::string line; std::getline(stream, line);) ++rows;
  CHECK(rows == 17);  // one row per catalogued bound
}

TEST_CASE("point cloud CSV layout") {
  const BlockInstance inst = golden_scalar(2.0, 0.6);
  const QnrSample sample = sample_qnr(inst, 3, 1);
  Vector spectrum(2);
  spectrum << Complex(-0.8), Complex(0.8);
  const std::string csv = point_cloud_csv(sample, Vector(), spectrum);
  std::istringstream stream(csv);
  std::string line;
  std::getline(stream, line);
  CHECK(line == "re,im,source");
  int qnr_rows = 0, spectrum_rows = 0;
  while (std::getline(stream, line)) {
    if (line.find(",qnr") != std::string::npos) ++qnr_rows;
    if (line.find(",spectrum") != std::string::npos) ++spectrum_rows;
  }
  CHECK(qnr_rows == 6);
  CHECK(spectrum_rows == 2);
}

TEST_CASE("ensemble runs are deterministic and respect the slack floor") {
  EnsembleConfig config;
  config.n_trials = 8;
  config.n0 = 3;
  config.n1 = 3;
  config.v_over_d = 0.25;
  config.disposition = DispositionClass::Gap;
  config.seed = 12345;

  const EnsembleOutcome first = run_bound_ensemble(config);
  const EnsembleOutcome second = run_bound_ensemble(config);
  CHECK(first.csv == second.csv);
  CHECK(first.trials_run == 8);
  CHECK(first.min_slack >= -1e-8);

  config.seed = 54321;
  const EnsembleOutcome other = run_bound_ensemble(config);
  CHECK(other.csv != first.csv);
}

TEST_CASE("empty ensemble still emits the header") {
  EnsembleConfig config;
  config.n_trials = 0;
  const EnsembleOutcome outcome = run_bound_ensemble(config);
  CHECK(outcome.csv == "trial,n0,n1,d,norm_v,bound_id,applicable,lhs,rhs,slack\n");
  CHECK(outcome.trials_run == 0);
}

} // TEST_SUITE("io")
