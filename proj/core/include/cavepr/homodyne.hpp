#pragma once

#include <string>
#include <vector>

#include "cavepr/effective.hpp"

namespace cavepr {

/// Homodyne difference-current correlation signal on a time grid.
/// Times are in units of 1/kappa.
struct CorrelationSeries {
  std::vector<double> kappa_t;
  std::vector<double> c12;
  std::vector<double> big_r;
  double r = 0.0;
  double theta1 = 0.0;
  double theta2 = 0.0;
  double delta_t_kappa = 0.0;  // grid resolution, kappa * delta t
  std::string scheme = "scheme1";
};

struct QuadratureMoments {
  double q1_sq = 0.0;  // <q1(theta1)^2>
  double q2_sq = 0.0;  // <q2(theta2)^2>
  double q1_q2 = 0.0;  // <q1(theta1) q2(theta2)>
};

/// Closed-form second moments of the cavity quadratures after the
/// half-period pulse.  Requires the periodic regime.
QuadratureMoments quadrature_moments(const Couplings& c, double theta1,
                                     double theta2);

/// Vacuum-noise weight R(t) = kappa dt e^{-2 kappa t} (<q1^2> + <q2^2>).
/// The continuum-limit treatment of the free field requires
/// kappa dt <= 0.2.
double ratio_R(double t, double delta_t, double kappa,
               const QuadratureMoments& m);

/// Correlation signal C_{1,2}(t) = 1 - R/(1+R) * 2<q1 q2>/(<q1^2>+<q2^2>).
double c12(double t, double delta_t, double kappa, const Couplings& c,
           double theta1, double theta2);

/// Same signal from r alone (the theta1 = theta2 = 0 reduction); used as
/// the second, independent evaluation route.
double c12_from_r(double big_r_value, double r);

/// One series per r value, theta1 = theta2 = 0, times in 1/kappa.
std::vector<CorrelationSeries> figure2(const std::vector<double>& r_list,
                                       const std::vector<double>& t_grid_kappa,
                                       double delta_t_kappa);

/// Delayed difference-current correlation of the two-pulse scheme.  The
/// effective r comes from tanh|chi|T1 = 2r/(1+r^2); the delay must satisfy
/// kappa tau >= 3 so the first pulse has left the cavity.
CorrelationSeries scheme2_correlation(std::complex<double> chi, double T1,
                                      double tau,
                                      const std::vector<double>& t_grid_kappa,
                                      double delta_t_kappa, double kappa,
                                      double theta1, double theta2);

/// CSV with columns kappa_t, C12, R.
void write_series_csv(const CorrelationSeries& series,
                      const std::string& path);

}  // namespace cavepr
