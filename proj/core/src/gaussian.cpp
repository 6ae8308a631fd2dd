#include "cavepr/gaussian.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace cavepr {

namespace {

using Complex = std::complex<double>;

Eigen::MatrixXd symplectic_form(int num_modes) {
  Eigen::MatrixXd omega = Eigen::MatrixXd::Zero(2 * num_modes, 2 * num_modes);
  for (int m = 0; m < num_modes; ++m) {
    omega(2 * m, 2 * m + 1) = 1.0;
    omega(2 * m + 1, 2 * m) = -1.0;
  }
  return omega;
}

// Real quadrature representation of a doubled-basis map: S = T M T^{-1}
// with the per-mode change of basis (x, p) = T (a, a^dag).
Eigen::MatrixXd quadrature_representation(const BogoliubovMap& map) {
  const int n = map.num_modes();
  const Complex i(0.0, 1.0);
  Eigen::MatrixXcd t = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
  Eigen::MatrixXcd tinv = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
  for (int m = 0; m < n; ++m) {
    t(2 * m, 2 * m) = 1.0;
    t(2 * m, 2 * m + 1) = 1.0;
    t(2 * m + 1, 2 * m) = -i;
    t(2 * m + 1, 2 * m + 1) = i;
    tinv(2 * m, 2 * m) = 0.5;
    tinv(2 * m, 2 * m + 1) = 0.5 * i;
    tinv(2 * m + 1, 2 * m) = 0.5;
    tinv(2 * m + 1, 2 * m + 1) = -0.5 * i;
  }
  const Eigen::MatrixXcd s = t * map.matrix * tinv;
  if (s.imag().cwiseAbs().maxCoeff() > 1e-9)
    throw std::invalid_argument(
        "apply_bogoliubov: map violates the conjugation structure");
  return s.real();
}

// Row vector selecting q(theta) = x cos(theta) - p sin(theta) of one mode.
Eigen::VectorXd quadrature_selector(int num_modes, int mode, double theta) {
  Eigen::VectorXd u = Eigen::VectorXd::Zero(2 * num_modes);
  u(2 * mode) = std::cos(theta);
  u(2 * mode + 1) = -std::sin(theta);
  return u;
}

}  // namespace

double GaussianState::uncertainty_defect() const {
  const int n = num_modes();
  Eigen::MatrixXcd m = cov.cast<Complex>() +
                       Complex(0.0, 1.0) * symplectic_form(n).cast<Complex>();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

GaussianState vacuum(int num_modes) {
  if (num_modes < 1) throw std::invalid_argument("vacuum: num_modes < 1");
  GaussianState s;
  s.mean = Eigen::VectorXd::Zero(2 * num_modes);
  s.cov = Eigen::MatrixXd::Identity(2 * num_modes, 2 * num_modes);
  return s;
}

GaussianState thermal(int num_modes, int mode, double nbar) {
  if (nbar < 0) throw std::invalid_argument("thermal: nbar < 0");
  GaussianState s = vacuum(num_modes);
  s.cov(2 * mode, 2 * mode) = 2.0 * nbar + 1.0;
  s.cov(2 * mode + 1, 2 * mode + 1) = 2.0 * nbar + 1.0;
  return s;
}

GaussianState apply_bogoliubov(const GaussianState& state,
                               const BogoliubovMap& map) {
  if (map.num_modes() != state.num_modes())
    throw std::invalid_argument("apply_bogoliubov: mode counts differ");
  if (map.symplectic_defect() > 1e-8)
    throw std::invalid_argument("apply_bogoliubov: map is not symplectic");
  const Eigen::MatrixXd s = quadrature_representation(map);
  GaussianState out;
  out.mean = s * state.mean;
  out.cov = s * state.cov * s.transpose();
  return out;
}

GaussianState cavity_decay(const GaussianState& state,
                           const std::vector<double>& kappas, double t) {
  if (t < 0) throw std::invalid_argument("cavity_decay: negative time");
  const int n = state.num_modes();
  if (static_cast<int>(kappas.size()) != n)
    throw std::invalid_argument("cavity_decay: one rate per mode required");
  Eigen::VectorXd f(2 * n);
  for (int m = 0; m < n; ++m) {
    if (kappas[m] < 0)
      throw std::invalid_argument("cavity_decay: negative rate");
    f(2 * m) = f(2 * m + 1) = std::exp(-kappas[m] * t);
  }
  GaussianState out;
  out.mean = f.cwiseProduct(state.mean);
  out.cov = f.asDiagonal() * state.cov * f.asDiagonal();
  for (int k = 0; k < 2 * n; ++k) out.cov(k, k) += 1.0 - f(k) * f(k);
  return out;
}

EprVariances epr_variance(const GaussianState& state, double theta1,
                          double theta2) {
  const int n = state.num_modes();
  if (n < 2) throw std::invalid_argument("epr_variance: needs two modes");
  const Eigen::VectorXd u = quadrature_selector(n, 0, theta1) -
                            quadrature_selector(n, 1, theta2);
  const Eigen::VectorXd v =
      quadrature_selector(n, 0, theta1 + std::numbers::pi / 2) +
      quadrature_selector(n, 1, theta2 + std::numbers::pi / 2);
  return {u.dot(state.cov * u), v.dot(state.cov * v)};
}

double quadrature_second_moment(const GaussianState& state, int mode,
                                double theta) {
  const Eigen::VectorXd u =
      quadrature_selector(state.num_modes(), mode, theta);
  const double mu = u.dot(state.mean);
  return u.dot(state.cov * u) + mu * mu;
}

double quadrature_cross_moment(const GaussianState& state, int mode_j,
                               double theta_j, int mode_k, double theta_k) {
  const Eigen::VectorXd u =
      quadrature_selector(state.num_modes(), mode_j, theta_j);
  const Eigen::VectorXd v =
      quadrature_selector(state.num_modes(), mode_k, theta_k);
  return u.dot(state.cov * v) + u.dot(state.mean) * v.dot(state.mean);
}

}  // namespace cavepr
