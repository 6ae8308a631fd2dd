#pragma once

#include <array>
#include <string>
#include <vector>

#include "cavepr/params.hpp"

namespace cavepr {

/// Cavity construction parameters: scaled free-space scattering cross
/// section, cavity bandwidth (rad/s) and finesse.
struct CavityParams {
  double sigma_tilde = 0.0;
  double delta_omega = 0.0;
  double finesse = 0.0;
};

/// Rates derived from the cavity and atom parameters.  These use |Delta|
/// and the gamma -> 0 coupling forms throughout.
struct DerivedRates {
  double g = 0.0;            // vacuum Rabi coupling, sqrt(sigma~ gamma dw)
  double kappa = 0.0;        // cavity linewidth, dw / finesse
  double Theta = 0.0;        // pair-creation rate of the bichromatic scheme
  double gamma_Theta = 0.0;  // laser-induced scattering rate
  double gamma_kappa = 0.0;  // cavity-vacuum scattering rate
  double r = 0.0;            // 1 + 2 nu / |Delta|
  double T_pi = 0.0;         // pulse half period, pi / Theta
};

struct RegimeCondition {
  std::string id;
  double left = 0.0;
  std::string relation;  // ">>" against the right value
  double right = 0.0;
  double margin = 0.0;   // left / right
  bool pass = false;
};

struct RegimeReport {
  std::string scheme;
  DerivedRates rates;
  double threshold = 5.0;
  std::vector<RegimeCondition> conditions;
  /// Values of the three-link summary chain (scheme 1 only; zeros
  /// otherwise), ordered large to small.
  std::array<double, 3> chain{0.0, 0.0, 0.0};
  /// Pass when every summary-chain link clears the threshold (scheme 1) or
  /// every condition does (scheme 2); per-condition flags carry the detail.
  bool pass = false;

  std::string to_json() const;
  std::string table() const;
};

/// Derived rates; throws std::invalid_argument on non-positive cavity
/// parameters.
DerivedRates derived_rates(const CavityParams& cavity,
                           const SystemParams& atom);

/// Margins of all validity inequalities of the bichromatic scheme,
/// including the three-link summary chain.
RegimeReport validate_scheme1(const SystemParams& params,
                              const CavityParams& cavity,
                              double threshold = 5.0);

/// Margins for the temporally-separated scheme at a target mean photon
/// number; throws std::domain_error when eta * sqrt(target_n) >= 1.
RegimeReport validate_scheme2(const SystemParams& params,
                              const CavityParams& cavity, double target_n,
                              double threshold = 5.0);

/// In+ reference parameter set (all angular frequencies).
SystemParams indium_params();
CavityParams indium_cavity();

}  // namespace cavepr
