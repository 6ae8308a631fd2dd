#pragma once

#include <vector>

#include <Eigen/Dense>

#include "cavepr/effective.hpp"

namespace cavepr {

/// Mean vector and covariance matrix in the quadrature basis
/// (x_1, p_1, x_2, p_2, ...), with x = a + a^dag, p = -i(a - a^dag).
/// Vacuum has unit variance per quadrature, so the homodyne shot-noise
/// constant is exactly 1.
struct GaussianState {
  Eigen::VectorXd mean;
  Eigen::MatrixXd cov;

  int num_modes() const { return static_cast<int>(mean.size()) / 2; }

  /// Most negative eigenvalue of cov + i Omega; physical states satisfy
  /// >= -1e-8.
  double uncertainty_defect() const;

  double purity_det() const { return cov.determinant(); }
};

GaussianState vacuum(int num_modes);

/// Single-mode thermal block with variance 2 nbar + 1 on the selected mode.
GaussianState thermal(int num_modes, int mode, double nbar);

/// Covariance conjugation cov -> S cov S^T, mean -> S mean, where S is the
/// real quadrature representation of the map.  The map is checked for
/// symplecticity first.
GaussianState apply_bogoliubov(const GaussianState& state,
                               const BogoliubovMap& map);

/// Exponential decay toward vacuum with vacuum input noise:
/// per-mode blocks scale by e^{-(kappa_j + kappa_k) t}, diagonal blocks gain
/// (1 - e^{-2 kappa t}) I, means scale by e^{-kappa t}.
GaussianState cavity_decay(const GaussianState& state,
                           const std::vector<double>& kappas, double t);

struct EprVariances {
  double x_minus = 0.0;  // var(q1(theta1) - q2(theta2))
  double p_plus = 0.0;   // var of the conjugate combination
};

/// EPR variances of the first two modes; vacuum gives (2, 2).
EprVariances epr_variance(const GaussianState& state, double theta1,
                          double theta2);

/// Second moment <q_k(theta)^2> of one mode (includes the vacuum unit).
double quadrature_second_moment(const GaussianState& state, int mode,
                                double theta);

/// Cross moment <q_j(theta_j) q_k(theta_k)> (symmetrized).
double quadrature_cross_moment(const GaussianState& state, int mode_j,
                               double theta_j, int mode_k, double theta_k);

}  // namespace cavepr
