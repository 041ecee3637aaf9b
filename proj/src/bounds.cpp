#include "krein/bounds.hpp"

#include <cmath>
#include <limits>

#include "krein/linalg.hpp"
#include "krein/tolerances.hpp"

namespace krein {

namespace {

constexpr double kHalfPi = M_PI / 2.0;

bool gap_any(const std::optional<Disposition>& disp) {
  return disp.has_value() && disp->gap_any();
}

bool subordinated(const std::optional<Disposition>& disp) {
  return disp.has_value() && disp->subordinated();
}

} // namespace

std::vector<CatalogueEntry> bound_catalogue(const BoundContext& ctx) {
  std::vector<CatalogueEntry> entries;
  const double v = ctx.norm_v;
  const double d = ctx.d;
  const double dh = ctx.delta_hat;

  auto add = [&](const std::string& id, BoundLhs kind, bool applicable, double rhs,
                 const std::string& used) {
    entries.push_back({id, kind, applicable, applicable ? rhs : 0.0, applicable ? used : ""});
  };

  // A priori bounds in terms of d = dist(sigma0, sigma1), gap disposition.
  const bool apriori_gap = d > 0.0 && v < d / 2.0 && gap_any(ctx.disp_unpert);
  add("B-1.1", BoundLhs::TanTheta, apriori_gap,
      apriori_gap ? std::tanh(0.5 * std::atanh(2.0 * v / d)) : 0.0, "d, gap(sigma0,sigma1)");
  add("B-1.1'", BoundLhs::Sin2Theta, apriori_gap, apriori_gap ? 2.0 * v / d : 0.0,
      "d, gap(sigma0,sigma1)");

  // Semi-a posteriori bounds in terms of delta_i = dist(sigma_i, sigma'_{1-i}).
  // Both entries are evaluated at one canonical index: the gap-qualifying
  // side with the larger distance when one exists, otherwise the side with
  // the larger distance. This keeps rhs(B-1.2b) <= rhs(B-1.2a).
  {
    double gap_delta = 0.0;
    std::string gap_used;
    if (gap_any(ctx.disp_semi0) && ctx.delta0 > gap_delta) {
      gap_delta = ctx.delta0;
      gap_used = "delta0, gap(sigma0,sigma1')";
    }
    if (gap_any(ctx.disp_semi1) && ctx.delta1 > gap_delta) {
      gap_delta = ctx.delta1;
      gap_used = "delta1, gap(sigma1,sigma0')";
    }
    const double plain_delta = std::max(ctx.delta0, ctx.delta1);
    const double delta = gap_delta > 0.0 ? gap_delta : plain_delta;
    const std::string used = gap_delta > 0.0
                                 ? gap_used
                                 : (ctx.delta0 >= ctx.delta1 ? "delta0" : "delta1");
    add("B-1.2a", BoundLhs::TanTheta, delta > 0.0, delta > 0.0 ? kHalfPi * v / delta : 0.0,
        used);
    add("B-1.2b", BoundLhs::TanTheta, gap_delta > 0.0, gap_delta > 0.0 ? v / gap_delta : 0.0,
        gap_used);
  }

  // A posteriori bounds in terms of delta_hat = dist(sigma0', sigma1').
  add("B-1.3a", BoundLhs::TanTheta, dh > 0.0, dh > 0.0 ? kHalfPi * v / dh : 0.0, "delta_hat");
  {
    const bool ok = gap_any(ctx.disp_pert);
    add("B-1.3b", BoundLhs::TanTheta, ok, ok ? v / std::sqrt(dh * dh + v * v) : 0.0,
        "delta_hat, gap(sigma0',sigma1')");
  }
  {
    const bool ok = subordinated(ctx.disp_pert);
    add("B-1.3c", BoundLhs::Tan2Theta, ok, ok ? 2.0 * v / dh : 0.0,
        "delta_hat, subordinated(sigma0',sigma1')");
  }

  // The same contraction bounds phrased for ||K|| directly, with
  // delta_{Z0,A1} = dist(sigma0', sigma1) and delta_{Z0,Z1} = delta_hat.
  add("B-3.1a", BoundLhs::NormK, ctx.delta1 > 0.0,
      ctx.delta1 > 0.0 ? kHalfPi * v / ctx.delta1 : 0.0, "delta1");
  {
    const bool ok = gap_any(ctx.disp_semi1) && ctx.delta1 > 0.0;
    add("B-3.1b", BoundLhs::NormK, ok, ok ? v / ctx.delta1 : 0.0, "delta1, gap(sigma1,sigma0')");
  }
  add("B-3.4", BoundLhs::NormK, dh > 0.0, dh > 0.0 ? kHalfPi * v / dh : 0.0, "delta_hat");
  {
    const bool ok = gap_any(ctx.disp_pert);
    add("B-3.6", BoundLhs::NormK, ok, ok ? v / std::sqrt(dh * dh + v * v) : 0.0,
        "delta_hat, gap(sigma0',sigma1')");
  }
  {
    const bool ok = subordinated(ctx.disp_pert) && dh > 0.0;
    add("B-3.7", BoundLhs::NormK, ok, ok ? std::tan(0.5 * std::atan(2.0 * v / dh)) : 0.0,
        "delta_hat, subordinated(sigma0',sigma1')");
  }

  // A priori angle bounds from the enclosure route; valid whenever the
  // unperturbed spectra are disjoint and ||V|| < d/2.
  const bool apriori = d > 0.0 && v < d / 2.0;
  add("B-6.4a", BoundLhs::TanTheta, apriori,
      apriori ? kHalfPi * std::tan(0.5 * std::asin(2.0 * v / d)) : 0.0, "d");
  add("B-6.4b", BoundLhs::TanTheta, apriori_gap,
      apriori_gap ? std::tan(0.5 * std::asin(2.0 * v / d)) : 0.0, "d, gap(sigma0,sigma1)");
  {
    const bool ok = d > 0.0 && v < d / M_PI;
    add("B-6.6", BoundLhs::TanTheta, ok, ok ? std::tan(0.5 * std::asin(M_PI * v / d)) : 0.0,
        "d");
  }
  {
    const bool ok = apriori && gap_any(ctx.disp_pert);
    add("B-6.7a", BoundLhs::TanTheta, ok, ok ? v / std::sqrt(d * d - 3.0 * v * v) : 0.0,
        "d, gap(sigma0',sigma1')");
  }
  add("B-6.7b", BoundLhs::TanTheta, apriori,
      apriori ? kHalfPi * v / std::sqrt(d * d - 4.0 * v * v) : 0.0, "d");

  return entries;
}

double BoundReport::min_slack() const {
  double slack = std::numeric_limits<double>::infinity();
  for (const auto& rec : records)
    if (rec.applicable) slack = std::min(slack, rec.slack);
  return slack;
}

bool BoundReport::all_hold(double slack_tol) const {
  for (const auto& rec : records)
    if (rec.applicable && rec.slack < -slack_tol) return false;
  return true;
}

namespace {

std::optional<Disposition> try_classify(const RealVector& set0, const RealVector& set1) {
  try {
    return classify_disposition(set0, set1);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::SetsIntersect) return std::nullopt;
    throw;
  }
}

} // namespace

BoundReport check_bounds(const BlockInstance& inst, const RiccatiSolution& sol,
                         const AngleReport& angles) {
  const RealVector sigma0 = hermitian_eigenvalues(inst.a0);
  const RealVector sigma1 = hermitian_eigenvalues(inst.a1);
  const RealVector& sigma0p = sol.sigma0_prime;
  const RealVector& sigma1p = sol.sigma1_prime;

  BoundContext ctx;
  ctx.norm_v = inst.norm_v();
  ctx.d = set_distance(sigma0, sigma1);
  ctx.delta0 = set_distance(sigma0, sigma1p);
  ctx.delta1 = set_distance(sigma1, sigma0p);
  ctx.delta_hat = set_distance(sigma0p, sigma1p);
  ctx.disp_unpert = try_classify(sigma0, sigma1);
  ctx.disp_pert = try_classify(sigma0p, sigma1p);
  ctx.disp_semi0 = try_classify(sigma0, sigma1p);
  ctx.disp_semi1 = try_classify(sigma1, sigma0p);

  BoundReport report;
  report.norm_v = ctx.norm_v;
  report.d = ctx.d;
  report.delta0 = ctx.delta0;
  report.delta1 = ctx.delta1;
  report.delta_hat = ctx.delta_hat;

  for (const auto& entry : bound_catalogue(ctx)) {
    BoundRecord rec;
    rec.bound_id = entry.bound_id;
    rec.applicable = entry.applicable;
    rec.disposition_used = entry.disposition_used;
    if (entry.applicable) {
      switch (entry.lhs_kind) {
        case BoundLhs::TanTheta: rec.lhs = angles.norm_tan; break;
        case BoundLhs::Sin2Theta: rec.lhs = angles.norm_sin2; break;
        case BoundLhs::Tan2Theta: rec.lhs = angles.norm_tan2; break;
        case BoundLhs::NormK: rec.lhs = sol.norm_k; break;
      }
      rec.rhs = entry.rhs;
      rec.slack = rec.rhs - rec.lhs;
    }
    report.records.push_back(rec);
  }
  return report;
}

TsuffReport tsuff_check(const BlockInstance& inst) {
  const RealVector sigma0 = hermitian_eigenvalues(inst.a0);
  const RealVector sigma1 = hermitian_eigenvalues(inst.a1);
  const Disposition disp = classify_disposition(sigma0, sigma1);  // throws SetsIntersect

  TsuffReport report;
  report.d = disp.d;
  report.norm_v = inst.norm_v();
  report.cond_i = report.norm_v < report.d / M_PI;
  report.cond_ii = report.norm_v < report.d / 2.0;
  for (const auto& [lo, hi] : enumerate_separating_gaps(sigma0, sigma1))
    report.gap_sum += 1.0 / (hi - lo);
  return report;
}

double apriori_deltahat_lower(double norm_v, double d) {
  if (!(norm_v < d / 2.0))
    throw Error(ErrorCode::TooLargePerturbation, "requires ||V|| < d/2");
  return std::sqrt(d * d - 4.0 * norm_v * norm_v);
}

} // namespace krein
