#include <doctest.h>

#include <cmath>
#include <numbers>

#include <cavepr/gaussian.hpp>

using namespace cavepr;

namespace {

Couplings couplings_from_r(double r) {
  Couplings c;
  c.chi1 = 1.0;
  c.chi2 = r;
  c.r = r;
  c.phi = 0.0;
  c.periodic = r > 1.0;
  c.theta = c.periodic ? std::sqrt(r * r - 1.0) : 0.0;
  return c;
}

}  // namespace

TEST_CASE("vacuum") {
  const GaussianState v = vacuum(2);
  CHECK((v.cov - Eigen::MatrixXd::Identity(4, 4)).norm() == 0.0);
  CHECK(v.mean.norm() == 0.0);
  CHECK(v.purity_det() == doctest::Approx(1.0));
  for (double th : {0.0, 0.7, 2.1})
    CHECK(quadrature_second_moment(v, 0, th) == doctest::Approx(1.0));
  CHECK(v.uncertainty_defect() > -1e-8);
}

TEST_CASE("thermal block") {
  const GaussianState t = thermal(2, 1, 0.5);
  CHECK(t.cov(0, 0) == doctest::Approx(1.0));
  CHECK(t.cov(2, 2) == doctest::Approx(2.0));
  CHECK(t.cov(3, 3) == doctest::Approx(2.0));
  CHECK(t.uncertainty_defect() > -1e-8);
}

TEST_CASE("apply bogoliubov: half-period moments at r = 1.1") {
  auto [t_pi, m] = half_period_map(couplings_from_r(1.1));
  GaussianState s = apply_bogoliubov(vacuum(3), m);
  const double r = 1.1, r2 = r * r;
  const double q1sq = (std::pow(1.0 + r2, 2) + 4.0 * r2) / std::pow(r2 - 1.0, 2);
  const double q1q2 = 4.0 * r * (1.0 + r2) / std::pow(r2 - 1.0, 2);
  CHECK(quadrature_second_moment(s, 0, 0.0) ==
        doctest::Approx(q1sq).epsilon(1e-10));
  CHECK(q1sq == doctest::Approx(220.50).epsilon(1e-4));
  CHECK(quadrature_cross_moment(s, 0, 0.0, 1, 0.0) ==
        doctest::Approx(q1q2).epsilon(1e-10));
  CHECK(q1q2 == doctest::Approx(220.49).epsilon(1e-4));
  // purity preserved
  CHECK(s.purity_det() == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(s.uncertainty_defect() > -1e-8);
}

TEST_CASE("apply bogoliubov rejects non-symplectic maps") {
  BogoliubovMap bad = BogoliubovMap::identity_map(1);
  bad.matrix(0, 0) = 2.0;
  bad.matrix(1, 1) = 2.0;
  CHECK_THROWS_AS(apply_bogoliubov(vacuum(1), bad), std::invalid_argument);
}

TEST_CASE("cavity decay") {
  GaussianState s = vacuum(1);
  s.cov *= 221.5;
  const GaussianState same = cavity_decay(s, {0.3}, 0.0);
  CHECK((same.cov - s.cov).norm() < 1e-12);

  const GaussianState d = cavity_decay(s, {1.0}, 1.0);
  CHECK(d.cov(0, 0) ==
        doctest::Approx(220.5 * std::exp(-2.0) + 1.0).epsilon(1e-10));
  CHECK(d.cov(0, 0) == doctest::Approx(30.84).epsilon(1e-3));

  const GaussianState gone = cavity_decay(s, {1.0}, 60.0);
  CHECK((gone.cov - Eigen::MatrixXd::Identity(2, 2)).norm() < 1e-10);

  CHECK_THROWS_AS(cavity_decay(s, {-1.0}, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(cavity_decay(s, {1.0}, -1.0), std::invalid_argument);
}

TEST_CASE("cavity decay composes") {
  auto [t_pi, m] = half_period_map(couplings_from_r(1.3));
  const GaussianState s = apply_bogoliubov(vacuum(3), m);
  const std::vector<double> k{0.7, 0.4, 0.0};
  const GaussianState a = cavity_decay(cavity_decay(s, k, 0.3), k, 0.9);
  const GaussianState b = cavity_decay(s, k, 1.2);
  CHECK((a.cov - b.cov).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("epr variance") {
  const EprVariances vac = epr_variance(vacuum(2), 0.0, 0.0);
  CHECK(vac.x_minus == doctest::Approx(2.0));
  CHECK(vac.p_plus == doctest::Approx(2.0));

  auto [t_pi, m] = half_period_map(couplings_from_r(1.1));
  const GaussianState s = apply_bogoliubov(vacuum(3), m);
  const EprVariances e = epr_variance(s, 0.0, 0.0);
  const double expect = 2.0 * 0.01 / (2.1 * 2.1);
  CHECK(e.x_minus == doctest::Approx(expect).epsilon(1e-8));
  CHECK(e.x_minus == doctest::Approx(0.004535).epsilon(1e-3));
  // rotated quadratures give the same result
  const double hp = std::numbers::pi / 2.0;
  const EprVariances rot = epr_variance(s, hp, -hp);
  CHECK(rot.x_minus == doctest::Approx(e.x_minus).epsilon(1e-10));
  // pure two-mode squeezed input saturates the pure-state product bound;
  // admixing noise can only raise it
  CHECK(e.p_plus == doctest::Approx(e.x_minus).epsilon(1e-10));
  const GaussianState noisy = cavity_decay(s, {0.5, 0.5, 0.0}, 0.3);
  const EprVariances en = epr_variance(noisy, 0.0, 0.0);
  CHECK(en.x_minus * en.p_plus >= e.x_minus * e.p_plus);
}
