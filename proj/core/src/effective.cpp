#include "cavepr/effective.hpp"

#include <cmath>
#include <stdexcept>

namespace cavepr {

namespace {

using Complex = std::complex<double>;

Eigen::MatrixXcd doubled_metric(int num_modes) {
  Eigen::MatrixXcd j = Eigen::MatrixXcd::Zero(2 * num_modes, 2 * num_modes);
  for (int m = 0; m < num_modes; ++m) {
    j(2 * m, 2 * m) = 1.0;
    j(2 * m + 1, 2 * m + 1) = -1.0;
  }
  return j;
}

}  // namespace

double Couplings::half_period() const {
  if (!periodic)
    throw std::domain_error("half_period: requires |chi2| > |chi1|");
  return std::numbers::pi / theta;
}

BogoliubovMap BogoliubovMap::identity_map(int num_modes) {
  return {Eigen::MatrixXcd::Identity(2 * num_modes, 2 * num_modes), 0.0};
}

double BogoliubovMap::symplectic_defect() const {
  const Eigen::MatrixXcd j = doubled_metric(num_modes());
  return (matrix * j * matrix.adjoint() - j).cwiseAbs().maxCoeff();
}

double BogoliubovMap::conjugation_defect() const {
  double worst = 0.0;
  const int n = num_modes();
  for (int k = 0; k < n; ++k)
    for (int m = 0; m < n; ++m) {
      worst = std::max(worst,
                       std::abs(matrix(2 * k + 1, 2 * m + 1) -
                                std::conj(matrix(2 * k, 2 * m))));
      worst = std::max(worst, std::abs(matrix(2 * k + 1, 2 * m) -
                                       std::conj(matrix(2 * k, 2 * m + 1))));
    }
  return worst;
}

BogoliubovMap BogoliubovMap::compose(const BogoliubovMap& other) const {
  if (matrix.rows() != other.matrix.rows())
    throw std::invalid_argument("compose: mode counts differ");
  return {matrix * other.matrix, time + other.time};
}

void BogoliubovMap::set_mode_row(int mode, const Eigen::RowVectorXcd& row) {
  matrix.row(2 * mode) = row;
  for (int m = 0; m < num_modes(); ++m) {
    matrix(2 * mode + 1, 2 * m + 1) = std::conj(row(2 * m));
    matrix(2 * mode + 1, 2 * m) = std::conj(row(2 * m + 1));
  }
}

Couplings coupling_constants(const SystemParams& p) {
  p.validate();
  if (std::abs(p.Delta - p.nu) < 1e-9 * p.nu ||
      std::abs(p.Delta + p.nu) < 1e-9 * p.nu)
    throw std::domain_error(
        "coupling_constants: singular denominator Delta -+ nu");

  const Complex i(0.0, 1.0);
  const double omega = p.Omega.amplitude;
  const Complex den1(p.Delta - p.nu, p.gamma / 2.0);
  const Complex den2(p.Delta + p.nu, p.gamma / 2.0);
  const Complex den0(p.Delta, p.gamma / 2.0);

  // cos(phi) tan(phi) written as sin(phi) so that phi = pi/2 stays regular.
  Couplings c;
  c.chi1 = p.eta * std::conj(p.g1) * omega *
           (std::cos(p.phi1) * std::cos(p.theta_L) / den1 +
            i * std::sin(p.phi1) * std::cos(p.theta_c) / den0);
  c.chi2 = p.eta * std::conj(p.g2) * omega *
           (std::cos(p.phi2) * std::cos(p.theta_L) / den2 +
            i * std::sin(p.phi2) * std::cos(p.theta_c) / den0);

  const double n1 = std::norm(c.chi1), n2 = std::norm(c.chi2);
  c.r = n1 > 0 ? std::sqrt(n2 / n1) : 0.0;
  c.phi = std::arg(c.chi1) + std::arg(c.chi2);
  c.periodic = n2 > n1 && n1 > 0;
  c.theta = c.periodic ? std::sqrt(n2 - n1) : 0.0;
  return c;
}

BogoliubovMap scheme1_propagator(const Couplings& c, double t) {
  if (!c.periodic)
    throw std::domain_error("scheme1_propagator: requires r > 1");
  const double th = c.theta;
  const double cs = std::cos(th * t), sn = std::sin(th * t);
  const double th2 = th * th;
  const double n1 = std::norm(c.chi1), n2 = std::norm(c.chi2);

  BogoliubovMap map = BogoliubovMap::identity_map(3);
  map.time = t;

  // Mode order (a1, a2, b); rows transcribed from the closed-form
  // Heisenberg solutions of the periodic regime.
  Eigen::RowVectorXcd row(6);
  row.setZero();
  row(0) = (n2 - n1 * cs) / th2;                     // a1(0)
  row(3) = -c.chi1 * c.chi2 * (1.0 - cs) / th2;      // a2^dag(0)
  row(5) = c.chi1 * sn / th;                         // b^dag(0)
  map.set_mode_row(0, row);

  row.setZero();
  row(1) = c.chi1 * c.chi2 * (1.0 - cs) / th2;       // a1^dag(0)
  row(2) = -(n1 - n2 * cs) / th2;                    // a2(0)
  row(4) = c.chi2 * sn / th;                         // b(0)
  map.set_mode_row(1, row);

  row.setZero();
  row(1) = c.chi1 * sn / th;                         // a1^dag(0)
  row(2) = -std::conj(c.chi2) * sn / th;             // a2(0)
  row(4) = cs;                                       // b(0)
  map.set_mode_row(2, row);

  return map;
}

std::pair<double, BogoliubovMap> half_period_map(const Couplings& c) {
  if (!c.periodic)
    throw std::domain_error("half_period_map: requires r > 1");
  const double th2 = c.theta * c.theta;
  const double n1 = std::norm(c.chi1), n2 = std::norm(c.chi2);
  const Complex diag = (n1 + n2) / th2;
  const Complex off = 2.0 * c.chi1 * c.chi2 / th2;

  BogoliubovMap map = BogoliubovMap::identity_map(3);
  map.time = c.half_period();

  Eigen::RowVectorXcd row(6);
  row.setZero();
  row(0) = diag;
  row(3) = -off;
  map.set_mode_row(0, row);

  row.setZero();
  row(1) = off;
  row(2) = -diag;
  map.set_mode_row(1, row);

  row.setZero();
  row(4) = -1.0;  // motion sign flip, exact
  map.set_mode_row(2, row);

  return {map.time, std::move(map)};
}

double charge_defect(const BogoliubovMap& map) {
  if (map.num_modes() != 3)
    throw std::invalid_argument("charge_defect: expects the (a1, a2, b) map");
  // C = b^dag b - a1^dag a1 + a2^dag a2 as v^H D v up to a constant.
  Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(6, 6);
  d(0, 0) = d(1, 1) = -0.5;
  d(2, 2) = d(3, 3) = 0.5;
  d(4, 4) = d(5, 5) = 0.5;
  return (map.matrix.adjoint() * d * map.matrix - d).cwiseAbs().maxCoeff();
}

TwoModeAmplitudes two_mode_state(double r, double phi, int n_max) {
  if (r <= 0) throw std::domain_error("two_mode_state: r must be positive");
  if (r == 1.0) throw std::domain_error("two_mode_state: r = 1 is singular");
  if (n_max < 1) throw std::invalid_argument("two_mode_state: n_max < 1");
  const Complex ratio =
      -2.0 * r * std::polar(1.0, phi) / (1.0 + r * r);
  const double c0 = (1.0 - r * r) / (1.0 + r * r);

  TwoModeAmplitudes out;
  out.c.resize(n_max + 1);
  Complex term(c0, 0.0);
  for (int n = 0; n <= n_max; ++n) {
    out.c[n] = term;
    out.truncated_norm += std::norm(term);
    term *= ratio;
  }
  return out;
}

double two_mode_mean_photons(double r) {
  const double d = 1.0 - r * r;
  return 4.0 * r * r / (d * d);
}

BogoliubovMap scheme2_squeeze(Complex chi, double T1) {
  if (T1 < 0) throw std::invalid_argument("scheme2_squeeze: T1 < 0");
  const double mag = std::abs(chi);
  const double ch = std::cosh(mag * T1), sh = std::sinh(mag * T1);
  const Complex phase = mag > 0 ? chi / mag : Complex(1.0, 0.0);

  BogoliubovMap map = BogoliubovMap::identity_map(2);
  map.time = T1;
  Eigen::RowVectorXcd row(4);
  row.setZero();
  row(0) = ch;
  row(3) = phase * sh;  // b^dag(0)
  map.set_mode_row(0, row);
  row.setZero();
  row(1) = phase * sh;  // a^dag(0)
  row(2) = ch;
  map.set_mode_row(1, row);
  return map;
}

std::pair<double, BogoliubovMap> scheme2_beamsplitter(Complex chi) {
  const double mag = std::abs(chi);
  if (mag == 0) throw std::domain_error("scheme2_beamsplitter: chi = 0");
  const Complex phase = chi / mag;
  const double T2 = std::numbers::pi / (2.0 * mag);

  BogoliubovMap map = BogoliubovMap::identity_map(2);
  map.time = T2;
  Eigen::RowVectorXcd row(4);
  row.setZero();
  row(2) = phase;  // a -> b e^{i phi_chi}
  map.set_mode_row(0, row);
  row.setZero();
  row(0) = -std::conj(phase);  // b -> -a e^{-i phi_chi}
  map.set_mode_row(1, row);
  return {T2, std::move(map)};
}

Complex scheme2_coupling(const SystemParams& p) {
  p.validate();
  if (p.Delta == 0.0)
    throw std::domain_error("scheme2_coupling: Delta = 0");
  const Complex i(0.0, 1.0);
  return p.eta * std::conj(p.g1) * p.Omega.amplitude / p.Delta *
         (std::cos(p.phi1) * std::cos(p.theta_L) +
          i * std::sin(p.phi1) * std::cos(p.theta_c));
}

double scheme2_effective_r(Complex chi, double T1) {
  const double s = std::tanh(std::abs(chi) * T1);
  if (s <= 0.0)
    throw std::domain_error(
        "scheme2_effective_r: zero squeezing has no entangled-regime r");
  return (1.0 + std::sqrt(1.0 - s * s)) / s;
}

}  // namespace cavepr
