#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>

namespace cavepr {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Pulse envelope; constant Rabi frequency unless a callback is installed.
struct RabiEnvelope {
  double amplitude = 0.0;                       // rad/s
  std::function<double(double)> shape = nullptr;  // optional Omega(t)

  double operator()(double t) const { return shape ? shape(t) : amplitude; }
  bool time_dependent() const { return static_cast<bool>(shape); }
};

/// Every physical symbol of the model in one validated record.
/// All frequencies are angular (rad/s); hbar = 1 throughout.
struct SystemParams {
  double nu = 0.0;      // trap frequency
  double Delta = 0.0;   // laser-atom detuning omega_L - omega_0 (signed)
  double delta1 = 0.0;  // laser-cavity detuning omega_L - omega_1
  double delta2 = 0.0;  // laser-cavity detuning omega_L - omega_2
  RabiEnvelope Omega;
  std::complex<double> g1{0.0, 0.0};  // atom-cavity couplings
  std::complex<double> g2{0.0, 0.0};
  double phi1 = 0.0;     // trap-position phases inside the mode functions
  double phi2 = 0.0;
  double theta_c = 0.0;  // cavity-axis / motional-axis angle
  double theta_L = 0.0;  // laser / motional-axis angle
  double eta = 0.0;      // Lamb-Dicke parameter
  double gamma = 0.0;    // spontaneous emission rate
  double kappa1 = 0.0;   // cavity decay rates
  double kappa2 = 0.0;

  /// Throws std::invalid_argument on out-of-domain or non-finite values.
  void validate() const;

  /// Enforces the bichromatic resonance condition delta1 = nu, delta2 = -nu.
  static SystemParams scheme1(double nu, double Delta, double Omega,
                              std::complex<double> g1,
                              std::complex<double> g2, double eta,
                              double gamma = 0.0, double kappa1 = 0.0,
                              double kappa2 = 0.0);
};

inline SystemParams SystemParams::scheme1(double nu, double Delta,
                                          double Omega_,
                                          std::complex<double> g1,
                                          std::complex<double> g2, double eta,
                                          double gamma, double kappa1,
                                          double kappa2) {
  SystemParams p;
  p.nu = nu;
  p.Delta = Delta;
  p.delta1 = nu;
  p.delta2 = -nu;
  p.Omega.amplitude = Omega_;
  p.g1 = g1;
  p.g2 = g2;
  p.eta = eta;
  p.gamma = gamma;
  p.kappa1 = kappa1;
  p.kappa2 = kappa2;
  p.validate();
  return p;
}

inline void SystemParams::validate() const {
  auto finite = [](double v) { return std::isfinite(v); };
  if (!finite(nu) || !finite(Delta) || !finite(delta1) || !finite(delta2) ||
      !finite(phi1) || !finite(phi2) || !finite(theta_c) || !finite(theta_L) ||
      !finite(eta) || !finite(gamma) || !finite(kappa1) || !finite(kappa2) ||
      !finite(Omega.amplitude) || !std::isfinite(std::abs(g1)) ||
      !std::isfinite(std::abs(g2)))
    throw std::invalid_argument("SystemParams: non-finite parameter");
  if (nu <= 0) throw std::invalid_argument("SystemParams: nu must be > 0");
  if (gamma < 0) throw std::invalid_argument("SystemParams: gamma < 0");
  if (kappa1 < 0 || kappa2 < 0)
    throw std::invalid_argument("SystemParams: kappa < 0");
  if (eta < 0 || eta >= 1)
    throw std::invalid_argument("SystemParams: eta must lie in [0, 1)");
}

}  // namespace cavepr
