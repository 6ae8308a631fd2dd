#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>

#include <cavepr/integrator.hpp>

using namespace cavepr;

TEST_CASE("pure cavity decay") {
  const ModeSpace s{{"dipole", 2}, {"motion", 2}, {"cav1", 4}};
  SystemParams p;
  p.nu = 1.0;
  p.Delta = -20.0;
  p.delta1 = 0.0;
  p.kappa1 = 0.4;
  // eta = 0, Omega = 0, g = 0: pure decay of the cavity mode
  DensityState rho = vacuum_state(s);
  rho.matrix.setZero();
  Vector one = fock_vector(s, {0, 0, 1});
  rho.matrix = one * one.adjoint();

  const double t1 = 1.5;
  IntegrationOptions opts;
  const Trajectory traj = integrate(rho, p, s, 0.0, t1, opts);
  const DensityState& fin = traj.points.back().state;
  const double n = expectation(fin, number_operator(s, "cav1")).real();
  CHECK(n == doctest::Approx(std::exp(-2.0 * p.kappa1 * t1)).epsilon(1e-7));
  CHECK(traj.max_trace_drift < 1e-8);
  fin.validate();
}

TEST_CASE("thermal motional state is stationary under the trap alone") {
  const ModeSpace s{{"dipole", 2}, {"motion", 12}, {"cav1", 2}};
  SystemParams p;
  p.nu = 1.0;
  p.Delta = -20.0;
  p.delta1 = 1.0;
  const DensityState rho = thermal_state(s, "motion", 0.8);
  const Trajectory traj = integrate(rho, p, s, 0.0, 2.0);
  const double n0 = expectation(rho, number_operator(s, "motion")).real();
  const double n1 =
      expectation(traj.points.back().state, number_operator(s, "motion"))
          .real();
  CHECK(n1 == doctest::Approx(n0).epsilon(1e-8));
  CHECK((traj.points.back().state.matrix - rho.matrix).cwiseAbs().maxCoeff() <
        1e-6);
}

TEST_CASE("eta = 0 decouples the motion") {
  const ModeSpace s{{"dipole", 2}, {"motion", 4}, {"cav1", 3}};
  SystemParams p;
  p.nu = 1.0;
  p.Delta = -5.0;
  p.delta1 = 1.0;
  p.Omega.amplitude = 0.8;
  p.g1 = 0.5;
  p.gamma = 0.3;
  p.kappa1 = 0.1;
  p.eta = 0.0;
  const DensityState rho = thermal_state(s, "motion", 0.5);
  const Trajectory traj = integrate(rho, p, s, 0.0, 3.0);
  const double n0 = expectation(rho, number_operator(s, "motion")).real();
  for (const auto& pt : traj.points) {
    const double nb = expectation(pt.state, number_operator(s, "motion")).real();
    CHECK(nb == doctest::Approx(n0).epsilon(1e-6));
  }
}

TEST_CASE("trajectory export") {
  const ModeSpace s{{"dipole", 2}, {"motion", 2}, {"cav1", 3}};
  SystemParams p;
  p.nu = 1.0;
  p.Delta = -20.0;
  p.delta1 = 0.0;
  p.kappa1 = 0.2;
  const Trajectory traj = integrate(vacuum_state(s), p, s, 0.0, 1.0);

  const std::string path = "traj_test.csv";
  write_trajectory_csv(traj, s, path);
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  CHECK(header == "t,n_dipole,n_motion,n_cav1");
  in.close();
  std::remove(path.c_str());

  const std::string meta = trajectory_metadata_json(traj, p, s);
  CHECK(meta.find("\"truncation_unsafe\"") != std::string::npos);
  CHECK(meta.find("\"dims\"") != std::string::npos);
}
