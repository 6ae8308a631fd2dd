#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "cavepr/params.hpp"

namespace cavepr {

/// Raman coupling constants of the adiabatically eliminated model.
///
/// chi1 drives the two-mode-squeezing interaction a1^dag b^dag, chi2 the
/// beam-splitter interaction a2^dag b.  The periodic regime requires
/// |chi2| > |chi1|; theta is only meaningful there.
struct Couplings {
  std::complex<double> chi1{0.0, 0.0};
  std::complex<double> chi2{0.0, 0.0};
  double theta = 0.0;  // sqrt(|chi2|^2 - |chi1|^2), 0 outside the regime
  double r = 0.0;      // |chi2 / chi1|
  double phi = 0.0;    // arg(chi1) + arg(chi2)
  bool periodic = false;

  double half_period() const;  // pi / theta; throws outside the regime
};

/// Linear map on the doubled operator vector (a1, a1^dag, a2, a2^dag, ...).
/// Rows for the daggered operators mirror the rows for the plain ones under
/// complex conjugation; symplecticity is M J M^H = J with
/// J = diag(+1, -1, +1, -1, ...).
struct BogoliubovMap {
  Eigen::MatrixXcd matrix;
  double time = 0.0;

  int num_modes() const { return static_cast<int>(matrix.rows()) / 2; }

  static BogoliubovMap identity_map(int num_modes);

  /// max-norm of M J M^H - J.
  double symplectic_defect() const;

  /// max-norm deviation of the dagger rows from the conjugated plain rows.
  double conjugation_defect() const;

  /// this ∘ other (apply other first).
  BogoliubovMap compose(const BogoliubovMap& other) const;

  /// Fill the two rows of one mode from the plain row; keeps the
  /// conjugation structure consistent by construction.
  void set_mode_row(int mode, const Eigen::RowVectorXcd& plain_row);
};

/// chi1, chi2 from the system parameters (laser frame, second-order
/// elimination of the dipole).  Throws on singular denominators
/// |Delta -+ nu| < 1e-9 nu.
Couplings coupling_constants(const SystemParams& params);

/// Periodic three-mode propagator of the bichromatic scheme; modes ordered
/// (a1, a2, b).  Requires the periodic regime (r > 1).
BogoliubovMap scheme1_propagator(const Couplings& c, double t);

/// T_pi = pi / theta together with the half-period map: cavity 2x2
/// Bogoliubov mixing, motion sign flip (exactly -identity).
std::pair<double, BogoliubovMap> half_period_map(const Couplings& c);

/// Quadratic charge b^dag b - a1^dag a1 + a2^dag a2 expressed against the
/// doubled basis; returns the conservation defect ||M^H D M - D||_max.
double charge_defect(const BogoliubovMap& map);

struct TwoModeAmplitudes {
  std::vector<std::complex<double>> c;  // amplitude on |n,n>
  double truncated_norm = 0.0;          // sum |c_n|^2 up to n_max
};

/// Schmidt amplitudes of the two-mode squeezed state left on the cavity
/// modes after half a period.  r = 1 is singular.
TwoModeAmplitudes two_mode_state(double r, double phi, int n_max);

/// Mean photon number per mode of that state, 4 r^2 / (1 - r^2)^2.
double two_mode_mean_photons(double r);

/// Two-mode squeezing map of the temporally-separated scheme, modes (a, b):
/// a(T1) = a cosh|chi|T1 + b^dag e^{i phi_chi} sinh|chi|T1.
BogoliubovMap scheme2_squeeze(std::complex<double> chi, double T1);

/// Swap pulse of the temporally-separated scheme: T2 = pi / 2|chi| and the
/// map sending a -> b e^{i phi_chi}.
std::pair<double, BogoliubovMap> scheme2_beamsplitter(std::complex<double> chi);

/// Effective coupling of the single-mode scheme,
/// chi = eta g^* Omega / Delta (cos phi cos theta_L + i sin phi cos theta_c).
std::complex<double> scheme2_coupling(const SystemParams& params);

/// Solves tanh|chi|T1 = 2r/(1+r^2) for the r > 1 root,
/// r = (1 + sqrt(1 - s^2)) / s.  Throws when tanh vanishes (no
/// entangled-regime r exists for zero squeezing).
double scheme2_effective_r(std::complex<double> chi, double T1);

}  // namespace cavepr
