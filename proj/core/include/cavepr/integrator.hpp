#pragma once

#include <string>
#include <vector>

#include "cavepr/fock.hpp"
#include "cavepr/model.hpp"
#include "cavepr/params.hpp"

namespace cavepr {

struct IntegrationOptions {
  double rel_tol = 1e-6;   // step-halving convergence on observables
  long initial_steps = 200;
  int max_halvings = 12;
  int num_outputs = 21;    // sampled trajectory points, end points included
};

struct TrajectoryPoint {
  double t;
  DensityState state;
};

struct Trajectory {
  std::vector<TrajectoryPoint> points;
  double max_top_population = 0.0;
  bool truncation_unsafe = false;
  long steps_used = 0;
  double max_trace_drift = 0.0;
};

/// Right-hand side of the master equation, -i[H, rho] + dissipators, with
/// the recoil kernel applied inside the sandwich term of the atomic channel.
Matrix lindblad_rhs(const SplitHamiltonian& h, const DissipatorSet& d,
                    const SystemParams& params, const Matrix& rho, double t);

/// Fixed-step classical RK4 with step halving until the per-mode occupation
/// observables at t1 change by less than rel_tol.
Trajectory integrate(const DensityState& rho0, const SystemParams& params,
                     const ModeSpace& space, double t0, double t1,
                     const IntegrationOptions& opts = {});

/// CSV export: t followed by <n> per mode (dipole column is the excited
/// population).
void write_trajectory_csv(const Trajectory& traj, const ModeSpace& space,
                          const std::string& path);

/// JSON metadata: parameters, dims, truncation flags.
std::string trajectory_metadata_json(const Trajectory& traj,
                                     const SystemParams& params,
                                     const ModeSpace& space);

}  // namespace cavepr
