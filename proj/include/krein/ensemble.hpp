#pragma once

#include <cstdint>
#include <string>

#include "krein/core.hpp"
#include "krein/rng.hpp"

namespace krein {

/// The three closed-form instances on which the contraction bounds are
/// attained with equality (parameterized by the spectral separation scale d
/// and coupling b):
///  - two_by_one:  C^2 (+) C^1, a0 = diag(-d, d), a1 = 0, b = (0, b)^T;
///    sharp for ||K|| = ||B|| / dist(sigma0', sigma1).
///  - one_by_two:  C^1 (+) C^2, a0 = 0, a1 = diag(-d, d), b = (b, b)/sqrt(2);
///    sharp for ||K|| = ||B|| / sqrt(delta_hat^2 + ||B||^2).
///  - scalar:      C^1 (+) C^1, a0 = -d/2, a1 = d/2, b = b;
///    sharp for ||tan 2 Theta|| = 2 ||B|| / delta_hat.
BlockInstance golden_two_by_one(double d, double b);
BlockInstance golden_one_by_two(double d, double b);
BlockInstance golden_scalar(double d, double b);

enum class DispositionClass { Generic, Gap, Subordinated };

DispositionClass disposition_class_from_name(const std::string& name);
const char* disposition_class_name(DispositionClass cls);

/// Random j_self_adjoint instance with prescribed disposition of
/// spec(a0) vs spec(a1) and ||B|| scaled to exactly v_over_d * d where d is
/// the realized spectral distance. Gap needs n0 >= 2; Generic needs
/// n0, n1 >= 2. Diagonal blocks are Haar-conjugated real spectra.
BlockInstance random_j_instance(Rng& rng, Index n0, Index n1, double v_over_d,
                                DispositionClass cls);

/// Random general-mode instance with real symmetric diagonal blocks whose
/// eigenvalues interlace on a unit-spaced jittered grid (all neighbourhood
/// radii stay pairwise disjoint), and independent real off-diagonal blocks
/// scaled so that ||B|| = ||C|| = ratio * d.
BlockInstance random_general_instance(Rng& rng, Index n0, Index n1, double ratio);

struct EnsembleConfig {
  int n_trials = 0;
  Index n0 = 4;
  Index n1 = 4;
  bool randomize_dims = false;  // sample dims in [2, n0] x [2, n1] per trial
  double v_over_d = 0.25;
  DispositionClass disposition = DispositionClass::Subordinated;
  std::uint64_t seed = 0;
};

struct EnsembleOutcome {
  std::string csv;          // one row per trial per catalogued bound
  double min_slack = 0.0;   // over all applicable bounds; +inf when no rows
  int trials_run = 0;
};

/// Runs the configured ensemble through the solve -> angles -> bounds
/// pipeline. Each trial uses the derived seed base_seed + trial_index, so
/// output is byte-identical for identical configs.
EnsembleOutcome run_bound_ensemble(const EnsembleConfig& config);

} // namespace krein
