#include "cavepr/integrator.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace cavepr {

Matrix lindblad_rhs(const SplitHamiltonian& h, const DissipatorSet& d,
                    const SystemParams& params, const Matrix& rho, double t) {
  const Complex mi(0.0, -1.0);
  const Matrix ham = h.h_static.matrix + params.Omega(t) * h.h_drive.matrix;
  Matrix out = mi * (ham * rho - rho * ham);
  for (const auto& ch : d.channels) {
    const Matrix& l = ch.op.matrix;
    const Matrix ldl = l.adjoint() * l;
    if (ch.recoil) {
      const DensityState sandwich = recoil_average(
          {ch.op.space, rho}, params, d.recoil.quadrature_order,
          d.recoil.density);
      out += ch.rate * (2.0 * (l * sandwich.matrix * l.adjoint()));
    } else {
      out += ch.rate * (2.0 * (l * rho * l.adjoint()));
    }
    out -= ch.rate * (ldl * rho + rho * ldl);
  }
  return out;
}

namespace {

struct RunResult {
  Trajectory traj;
  Eigen::VectorXd final_obs;
};

RunResult run_fixed(const DensityState& rho0, const SystemParams& params,
                    const ModeSpace& space, const SplitHamiltonian& h,
                    const DissipatorSet& d, double t0, double t1, long steps,
                    int num_outputs) {
  std::vector<Operator> numbers;
  for (int m = 0; m < space.num_modes(); ++m)
    numbers.push_back(number_operator(space, space.label(m)));

  RunResult res;
  res.traj.steps_used = steps;
  const double dt = (t1 - t0) / double(steps);
  Matrix rho = rho0.matrix;

  const long out_every =
      std::max<long>(1, steps / std::max(1, num_outputs - 1));
  auto record = [&](double t) {
    DensityState st{space, rho};
    res.traj.points.push_back({t, st});
    res.traj.max_top_population =
        std::max(res.traj.max_top_population, top_level_population(st));
    res.traj.max_trace_drift = std::max(
        res.traj.max_trace_drift, std::abs(rho.trace().real() - 1.0));
  };
  record(t0);

  for (long s = 0; s < steps; ++s) {
    const double t = t0 + s * dt;
    const Matrix k1 = lindblad_rhs(h, d, params, rho, t);
    const Matrix k2 =
        lindblad_rhs(h, d, params, rho + 0.5 * dt * k1, t + 0.5 * dt);
    const Matrix k3 =
        lindblad_rhs(h, d, params, rho + 0.5 * dt * k2, t + 0.5 * dt);
    const Matrix k4 = lindblad_rhs(h, d, params, rho + dt * k3, t + dt);
    rho += dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    if ((s + 1) % out_every == 0 || s == steps - 1) record(t + dt);
  }

  res.traj.truncation_unsafe =
      res.traj.max_top_population > kTruncationUnsafe;
  res.final_obs.resize(space.num_modes());
  const DensityState fin{space, rho};
  for (int m = 0; m < space.num_modes(); ++m)
    res.final_obs(m) = expectation(fin, numbers[m]).real();
  return res;
}

}  // namespace

Trajectory integrate(const DensityState& rho0, const SystemParams& params,
                     const ModeSpace& space, double t0, double t1,
                     const IntegrationOptions& opts) {
  if (rho0.space != space)
    throw std::invalid_argument("integrate: state space mismatch");
  rho0.validate();
  const SplitHamiltonian h = build_hamiltonian_split(params, space);
  const DissipatorSet d = build_dissipators(params, space);

  long steps = opts.initial_steps;
  RunResult prev =
      run_fixed(rho0, params, space, h, d, t0, t1, steps, opts.num_outputs);
  for (int halving = 0; halving < opts.max_halvings; ++halving) {
    steps *= 2;
    RunResult next =
        run_fixed(rho0, params, space, h, d, t0, t1, steps, opts.num_outputs);
    double change = 0.0;
    for (int m = 0; m < space.num_modes(); ++m) {
      const double scale = std::max(1.0, std::abs(next.final_obs(m)));
      change = std::max(
          change, std::abs(next.final_obs(m) - prev.final_obs(m)) / scale);
    }
    prev = std::move(next);
    if (change < opts.rel_tol) return std::move(prev.traj);
  }
  throw std::runtime_error(
      "integrate: step halving failed to converge (step-size underflow)");
}

void write_trajectory_csv(const Trajectory& traj, const ModeSpace& space,
                          const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "'");
  out.precision(17);
  out << "t";
  for (int m = 0; m < space.num_modes(); ++m)
    out << ",n_" << space.label(m);
  out << '\n';
  std::vector<Operator> numbers;
  for (int m = 0; m < space.num_modes(); ++m)
    numbers.push_back(number_operator(space, space.label(m)));
  for (const auto& pt : traj.points) {
    out << pt.t;
    for (const auto& n : numbers)
      out << ',' << expectation(pt.state, n).real();
    out << '\n';
  }
}

std::string trajectory_metadata_json(const Trajectory& traj,
                                     const SystemParams& params,
                                     const ModeSpace& space) {
  nlohmann::json j;
  j["params"] = {{"nu", params.nu},         {"Delta", params.Delta},
                 {"delta1", params.delta1}, {"delta2", params.delta2},
                 {"Omega", params.Omega.amplitude},
                 {"g1", {params.g1.real(), params.g1.imag()}},
                 {"g2", {params.g2.real(), params.g2.imag()}},
                 {"phi1", params.phi1},     {"phi2", params.phi2},
                 {"theta_c", params.theta_c},
                 {"theta_L", params.theta_L},
                 {"eta", params.eta},       {"gamma", params.gamma},
                 {"kappa1", params.kappa1}, {"kappa2", params.kappa2}};
  nlohmann::json dims = nlohmann::json::object();
  for (int m = 0; m < space.num_modes(); ++m)
    dims[space.label(m)] = space.dim(m);
  j["dims"] = dims;
  j["steps_used"] = traj.steps_used;
  j["max_top_population"] = traj.max_top_population;
  j["truncation_unsafe"] = traj.truncation_unsafe;
  j["max_trace_drift"] = traj.max_trace_drift;
  return j.dump(2);
}

}  // namespace cavepr
