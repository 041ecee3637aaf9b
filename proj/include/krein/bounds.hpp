#pragma once

#include <optional>
#include <string>
#include <vector>

#include "krein/angles.hpp"
#include "krein/core.hpp"
#include "krein/riccati.hpp"
#include "krein/types.hpp"

namespace krein {

/// Which computed quantity a bound constrains.
enum class BoundLhs { TanTheta, Sin2Theta, Tan2Theta, NormK };

/// Distances and dispositions every bound in the catalogue is parameterized
/// by. A missing disposition means the corresponding pair of sets intersects
/// (bounds needing it become inapplicable).
struct BoundContext {
  double norm_v = 0.0;     // spectral norm of V (= ||B|| for off-diagonal V)
  double d = 0.0;          // dist(sigma0, sigma1)
  double delta0 = 0.0;     // dist(sigma0, sigma1')
  double delta1 = 0.0;     // dist(sigma1, sigma0')
  double delta_hat = 0.0;  // dist(sigma0', sigma1')
  std::optional<Disposition> disp_unpert;  // (sigma0, sigma1)
  std::optional<Disposition> disp_pert;    // (sigma0', sigma1')
  std::optional<Disposition> disp_semi0;   // (sigma0, sigma1')
  std::optional<Disposition> disp_semi1;   // (sigma1, sigma0')
};

struct CatalogueEntry {
  std::string bound_id;
  BoundLhs lhs_kind = BoundLhs::TanTheta;
  bool applicable = false;
  double rhs = 0.0;             // valid only when applicable
  std::string disposition_used; // which distance / disposition fed the rhs
};

/// Evaluates the right-hand side of every catalogued inequality, flagging
/// each as applicable or not. Hypotheses are checked, never clipped: an
/// out-of-domain argument marks the bound inapplicable.
std::vector<CatalogueEntry> bound_catalogue(const BoundContext& ctx);

struct BoundRecord {
  std::string bound_id;
  bool applicable = false;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;  // rhs - lhs
  std::string disposition_used;
};

struct BoundReport {
  std::vector<BoundRecord> records;
  double norm_v = 0.0;
  double d = 0.0;
  double delta0 = 0.0;
  double delta1 = 0.0;
  double delta_hat = 0.0;

  double min_slack() const;  // over applicable records; +inf if none
  bool all_hold(double slack_tol) const;
};

/// Measures all distances from the instance and its solution, classifies the
/// dispositions, evaluates the catalogue and fills in lhs/slack per bound.
BoundReport check_bounds(const BlockInstance& inst, const RiccatiSolution& sol,
                         const AngleReport& angles);

/// The solvability conditions on an instance with disjoint unperturbed
/// spectra: (i) ||V|| < d/pi, (ii) ||V|| < d/2 together with the (finite)
/// sum of reciprocal separating-gap lengths.
struct TsuffReport {
  bool cond_i = false;
  bool cond_ii = false;
  double gap_sum = 0.0;
  double d = 0.0;
  double norm_v = 0.0;
};
TsuffReport tsuff_check(const BlockInstance& inst);

/// Lower bound sqrt(d^2 - 4 ||V||^2) on the distance between the perturbed
/// spectral components. Throws TooLargePerturbation unless ||V|| < d/2.
double apriori_deltahat_lower(double norm_v, double d);

} // namespace krein
