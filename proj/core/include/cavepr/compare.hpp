#pragma once

#include <array>
#include <string>

#include "cavepr/effective.hpp"
#include "cavepr/params.hpp"

namespace cavepr {

struct ComparisonOptions {
  /// RK4 step as a fraction of the fastest period, dt = dt_scale / w_max.
  double dt_scale = 0.1;
  /// Detune the cavity modes by the second-order dispersive shifts so the
  /// dressed modes sit at omega_L -+ nu, as an experiment would tune them.
  bool stark_compensation = true;
};

/// Outcome of one full-model-vs-effective-model run (kappa = 0 during the
/// pulse; the dipole is traced out before comparing).
struct ComparisonReport {
  double pulse_duration = 0.0;
  double r = 0.0;
  double n1_full = 0.0, n2_full = 0.0, nb_full = 0.0;
  double n1_eff = 0.0, n2_eff = 0.0, nb_eff = 0.0;
  double pair_corr_full = 0.0;  // |<a1 a2>|
  double pair_corr_eff = 0.0;
  double cavity_fidelity = 0.0;  // reduced two-mode state vs ideal TMS
  double rel_err_n1 = 0.0, rel_err_n2 = 0.0, rel_err_corr = 0.0;
  double max_rel_err = 0.0;
  double max_top_population = 0.0;
  bool truncation_unsafe = false;
  long steps = 0;

  std::string to_json() const;
};

/// Runs the full 4-mode model (dipole, motion, cav1, cav2 with the given
/// truncations) for the pulse duration T (T <= 0 selects the half period)
/// and compares occupations and two-mode correlations against the
/// half-period-map predictions.  Requires gamma = kappa = 0 so the pulse
/// dynamics are unitary and a state-vector integration applies.
ComparisonReport compare_full_vs_effective(const SystemParams& params,
                                           double T,
                                           const std::array<int, 4>& dims,
                                           const ComparisonOptions& opts = {});

/// Scheme-1 parameter set used for the elimination-validation studies:
/// Delta = -delta_over_nu * nu (red detuning), Omega/|Delta| = 0.1,
/// eta = 0.1, and g2/g1 adjusted so that |chi2/chi1| = r.
SystemParams validation_params(double nu, double delta_over_nu, double r,
                               double g1_over_nu);

}  // namespace cavepr
