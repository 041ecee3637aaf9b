#include "krein/report_io.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace krein {

using nlohmann::json;

std::string format_double(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

namespace {

json angles_json(const RealVector& v) {
  json arr = json::array();
  for (Index i = 0; i < v.size(); ++i) arr.push_back(v(i));
  return arr;
}

} // namespace

std::string bound_report_csv(const BoundReport& report) {
  std::ostringstream out;
  out << "bound_id,applicable,lhs,rhs,slack\n";
  for (const auto& rec : report.records) {
    out << rec.bound_id << ',' << (rec.applicable ? "true" : "false") << ',';
    if (rec.applicable) {
      out << format_double(rec.lhs) << ',' << format_double(rec.rhs) << ','
          << format_double(rec.slack);
    } else {
      out << ",,";
    }
    out << '\n';
  }
  return out.str();
}

std::string bound_report_json(const BoundReport& report) {
  json j;
  j["norm_v"] = report.norm_v;
  j["d"] = report.d;
  j["delta0"] = report.delta0;
  j["delta1"] = report.delta1;
  j["delta_hat"] = report.delta_hat;
  j["bounds"] = json::array();
  for (const auto& rec : report.records) {
    json e;
    e["bound_id"] = rec.bound_id;
    e["applicable"] = rec.applicable;
    if (rec.applicable) {
      e["lhs"] = rec.lhs;
      e["rhs"] = rec.rhs;
      e["slack"] = rec.slack;
      e["disposition_used"] = rec.disposition_used;
    }
    j["bounds"].push_back(std::move(e));
  }
  return j.dump(2);
}

std::string enclosure_report_json(const EnclosureReport& report) {
  json j;
  j["r_v"] = report.r_v;
  j["all_real"] = report.all_real;
  j["inclusion_ok"] = report.inclusion_ok;
  j["eigenvalues"] = json::array();
  for (Index i = 0; i < report.eigenvalues.size(); ++i) {
    json e;
    e["re"] = report.eigenvalues(i).real();
    e["im"] = report.eigenvalues(i).imag();
    e["group"] = report.groups[static_cast<std::size_t>(i)];
    e["dist"] = report.dist_to_component(i);
    e["margin"] = report.margins(i);
    j["eigenvalues"].push_back(std::move(e));
  }
  return j.dump(2);
}

std::string point_cloud_csv(const QnrSample& qnr, const Vector& nr_points,
                            const Vector& spectrum) {
  std::ostringstream out;
  out << "re,im,source\n";
  for (Index i = 0; i < qnr.points.size(); ++i)
    out << format_double(qnr.points(i).real()) << ',' << format_double(qnr.points(i).imag())
        << ",qnr\n";
  for (Index i = 0; i < nr_points.size(); ++i)
    out << format_double(nr_points(i).real()) << ',' << format_double(nr_points(i).imag())
        << ",nr\n";
  for (Index i = 0; i < spectrum.size(); ++i)
    out << format_double(spectrum(i).real()) << ',' << format_double(spectrum(i).imag())
        << ",spectrum\n";
  return out.str();
}

std::string solution_summary_json(const RiccatiSolution& sol, const AngleReport& angles) {
  json j;
  j["norm_k"] = sol.norm_k;
  j["residual"] = sol.residual;
  j["sigma0_prime"] = angles_json(sol.sigma0_prime);
  j["sigma1_prime"] = angles_json(sol.sigma1_prime);
  j["theta0"] = angles_json(angles.theta0);
  j["theta1"] = angles_json(angles.theta1);
  j["norm_tan"] = angles.norm_tan;
  j["norm_sin2"] = angles.norm_sin2;
  j["norm_tan2"] = angles.norm_tan2;
  return j.dump(2);
}

std::string oscillator_report_json(const OscillatorModel& model, const OscillatorReport& report) {
  json j;
  j["truncation_m"] = model.truncation_m;
  j["beta"] = model.beta;
  j["profile"] = model.profile_name;
  j["quad_nodes"] = model.quad_nodes;
  j["norm_v_trunc"] = model.norm_v_trunc;
  j["max_imag"] = report.max_imag;
  j["real_ok"] = report.real_ok;
  j["enclosure_applicable"] = report.enclosure_applicable;
  if (report.enclosure_applicable) {
    j["r_v"] = report.r_v_used;
    j["enclosure_ok"] = report.enclosure_ok;
    j["max_interior_dist"] = report.max_interior_dist;
  }
  j["angle_suite_ran"] = report.angle_suite_ran;
  if (report.angle_suite_ran) {
    j["angle_bound_rhs"] = report.angle_bound_rhs;
    j["norm_tan_theta"] = report.norm_tan_theta;
    j["angle_ok"] = report.angle_ok;
  }
  j["eigenvalues_re"] = angles_json(report.eigenvalue_re);
  j["eigenvalues_im"] = angles_json(report.eigenvalue_im);
  return j.dump(2);
}

} // namespace krein
