#pragma once

#include <functional>
#include <vector>

#include "cavepr/fock.hpp"
#include "cavepr/params.hpp"

namespace cavepr {

/// Jump channel of the master equation; contributes
///   rate * (2 L rho~ L^dag - L^dag L rho - rho L^dag L)
/// where rho~ is the recoil-averaged state when `recoil` is set and rho
/// otherwise.
struct JumpChannel {
  Operator op;
  double rate = 0.0;
  bool recoil = false;
};

/// Angular recoil distribution N(u) on [-1, 1]; must integrate to 1.
struct RecoilPattern {
  std::function<double(double)> density = [](double) { return 0.5; };
  int quadrature_order = 8;
};

struct DissipatorSet {
  std::vector<JumpChannel> channels;
  RecoilPattern recoil;
};

/// H(t) = h_static + Omega(t) * h_drive in the laser rotating frame.
struct SplitHamiltonian {
  Operator h_static;
  Operator h_drive;

  Operator at(const SystemParams& params, double t) const {
    return {h_static.space,
            h_static.matrix + params.Omega(t) * h_drive.matrix};
  }
};

/// Full Hamiltonian of the laser-driven trapped atom coupled to one or two
/// cavity modes, expanded to second order in the Lamb-Dicke parameter.
/// The space must contain a "dipole" mode (dim 2) and a "motion" mode;
/// cavity modes are labeled "cav1" and optionally "cav2".
SplitHamiltonian build_hamiltonian_split(const SystemParams& params,
                                         const ModeSpace& space);

Operator build_hamiltonian(const SystemParams& params, const ModeSpace& space,
                           double t);

DissipatorSet build_dissipators(const SystemParams& params,
                                const ModeSpace& space);

/// Angular average over recoil kicks: integral du N(u) e^{-i eta u X} rho
/// e^{+i eta u X} with X the motional position quadrature, evaluated by
/// Gauss-Legendre quadrature.
DensityState recoil_average(const DensityState& rho,
                            const SystemParams& params, int quadrature_order,
                            const std::function<double(double)>& pattern =
                                [](double) { return 0.5; });

/// Gauss-Legendre nodes and weights on [-1, 1].
void gauss_legendre(int order, std::vector<double>& nodes,
                    std::vector<double>& weights);

}  // namespace cavepr
