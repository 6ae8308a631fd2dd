#include "cavepr/homodyne.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

namespace cavepr {

namespace {

// Canonical coupling pair with the requested squeezing ratio; the
// correlation signal depends on chi1, chi2 only through r.
Couplings couplings_from_r(double r) {
  if (r <= 1.0)
    throw std::domain_error("correlation signal requires r > 1");
  Couplings c;
  c.chi1 = 1.0;
  c.chi2 = r;
  c.r = r;
  c.phi = 0.0;
  c.periodic = true;
  c.theta = std::sqrt(r * r - 1.0);
  return c;
}

void check_grid(double delta_t_kappa) {
  if (delta_t_kappa <= 0.0 || delta_t_kappa > 0.2)
    throw std::domain_error(
        "grid resolution must satisfy 0 < kappa dt <= 0.2 for the "
        "continuum-limit free-field treatment");
}

}  // namespace

QuadratureMoments quadrature_moments(const Couplings& c, double theta1,
                                     double theta2) {
  if (!c.periodic)
    throw std::domain_error("quadrature_moments: requires r > 1");
  const double n1 = std::norm(c.chi1), n2 = std::norm(c.chi2);
  const double th4 = (n2 - n1) * (n2 - n1);
  QuadratureMoments m;
  m.q1_sq = ((n1 + n2) * (n1 + n2) + 4.0 * n1 * n2) / th4;
  m.q2_sq = m.q1_sq;
  m.q1_q2 = (4.0 * c.chi1 * c.chi2 * (n1 + n2) *
             std::polar(1.0, theta1 + theta2) / th4)
                .real();
  return m;
}

double ratio_R(double t, double delta_t, double kappa,
               const QuadratureMoments& m) {
  check_grid(kappa * delta_t);
  return kappa * delta_t * std::exp(-2.0 * kappa * t) * (m.q1_sq + m.q2_sq);
}

double c12(double t, double delta_t, double kappa, const Couplings& c,
           double theta1, double theta2) {
  const QuadratureMoments m = quadrature_moments(c, theta1, theta2);
  const double big_r = ratio_R(t, delta_t, kappa, m);
  return 1.0 -
         big_r / (1.0 + big_r) * 2.0 * m.q1_q2 / (m.q1_sq + m.q2_sq);
}

double c12_from_r(double big_r_value, double r) {
  const double s = 2.0 * r / (1.0 + r * r);
  return 1.0 -
         big_r_value / (1.0 + big_r_value) * s * 2.0 / (1.0 + s * s);
}

std::vector<CorrelationSeries> figure2(const std::vector<double>& r_list,
                                       const std::vector<double>& t_grid_kappa,
                                       double delta_t_kappa) {
  if (r_list.empty())
    throw std::invalid_argument("figure2: empty r list");
  check_grid(delta_t_kappa);
  std::vector<CorrelationSeries> out;
  out.reserve(r_list.size());
  // kappa = 1 internally: the grid is already in units of 1/kappa.
  for (double r : r_list) {
    const Couplings c = couplings_from_r(r);
    const QuadratureMoments m = quadrature_moments(c, 0.0, 0.0);
    CorrelationSeries s;
    s.kappa_t = t_grid_kappa;
    s.r = r;
    s.delta_t_kappa = delta_t_kappa;
    s.c12.reserve(t_grid_kappa.size());
    s.big_r.reserve(t_grid_kappa.size());
    for (double kt : t_grid_kappa) {
      const double big_r = ratio_R(kt, delta_t_kappa, 1.0, m);
      s.big_r.push_back(big_r);
      s.c12.push_back(c12(kt, delta_t_kappa, 1.0, c, 0.0, 0.0));
    }
    out.push_back(std::move(s));
  }
  return out;
}

CorrelationSeries scheme2_correlation(std::complex<double> chi, double T1,
                                      double tau,
                                      const std::vector<double>& t_grid_kappa,
                                      double delta_t_kappa, double kappa,
                                      double theta1, double theta2) {
  if (kappa * tau < 3.0)
    throw std::domain_error(
        "scheme2_correlation: kappa tau >= 3 required; the first pulse must "
        "have left the cavity before the second is measured");
  check_grid(delta_t_kappa);
  const double r = scheme2_effective_r(chi, T1);
  const Couplings c = couplings_from_r(r);
  const QuadratureMoments m = quadrature_moments(c, theta1, theta2);

  CorrelationSeries s;
  s.kappa_t = t_grid_kappa;
  s.r = r;
  s.theta1 = theta1;
  s.theta2 = theta2;
  s.delta_t_kappa = delta_t_kappa;
  s.scheme = "scheme2";
  for (double kt : t_grid_kappa) {
    const double big_r = ratio_R(kt / kappa, delta_t_kappa / kappa, kappa, m);
    s.big_r.push_back(big_r);
    s.c12.push_back(1.0 - big_r / (1.0 + big_r) * 2.0 * m.q1_q2 /
                              (m.q1_sq + m.q2_sq));
  }
  return s;
}

void write_series_csv(const CorrelationSeries& series,
                      const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out.precision(17);
  out << "kappa_t,C12,R\n";
  for (std::size_t k = 0; k < series.kappa_t.size(); ++k)
    out << series.kappa_t[k] << ',' << series.c12[k] << ',' << series.big_r[k]
        << '\n';
}

}  // namespace cavepr
