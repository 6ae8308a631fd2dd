#include <cmath>
#include <numbers>

#include <benchmark/benchmark.h>

#include <cavepr/gaussian.hpp>
#include <cavepr/homodyne.hpp>
#include <cavepr/integrator.hpp>
#include <cavepr/sparse_ops.hpp>

using namespace cavepr;

namespace {

Couplings couplings_from_r(double r) {
  Couplings c;
  c.chi1 = 1.0;
  c.chi2 = r;
  c.r = r;
  c.phi = 0.0;
  c.periodic = true;
  c.theta = std::sqrt(r * r - 1.0);
  return c;
}

SystemParams bench_params() {
  SystemParams p;
  p.nu = 1.0;
  p.Delta = -20.0;
  p.delta1 = 1.0;
  p.delta2 = -1.0;
  p.Omega.amplitude = 2.0;
  p.g1 = 0.2;
  p.g2 = 0.36;
  p.eta = 0.1;
  return p;
}

void bm_propagator(benchmark::State& state) {
  const Couplings c = couplings_from_r(1.3);
  double t = 0.0;
  for (auto _ : state) {
    t += 0.01;
    benchmark::DoNotOptimize(scheme1_propagator(c, t));
  }
}
BENCHMARK(bm_propagator);

void bm_gaussian_apply(benchmark::State& state) {
  const Couplings c = couplings_from_r(1.3);
  const BogoliubovMap m = scheme1_propagator(c, 0.7);
  const GaussianState v = vacuum(3);
  for (auto _ : state) benchmark::DoNotOptimize(apply_bogoliubov(v, m));
}
BENCHMARK(bm_gaussian_apply);

void bm_c12_series(benchmark::State& state) {
  std::vector<double> grid;
  for (int k = 0; k <= 100; ++k) grid.push_back(0.05 * k);
  for (auto _ : state)
    benchmark::DoNotOptimize(figure2({1.8, 1.5, 1.3, 1.1, 1.05}, grid, 0.1));
}
BENCHMARK(bm_c12_series);

void bm_lindblad_rhs(benchmark::State& state) {
  const ModeSpace s{{"dipole", 2}, {"motion", 6}, {"cav1", 5}, {"cav2", 5}};
  const SystemParams p = bench_params();
  const SplitHamiltonian h = build_hamiltonian_split(p, s);
  const DissipatorSet d = build_dissipators(p, s);
  const Matrix rho = vacuum_state(s).matrix;
  for (auto _ : state)
    benchmark::DoNotOptimize(lindblad_rhs(h, d, p, rho, 0.0));
}
BENCHMARK(bm_lindblad_rhs);

void bm_sparse_step(benchmark::State& state) {
  const ModeSpace s{{"dipole", 2}, {"motion", 12}, {"cav1", 14}, {"cav2", 14}};
  const SystemParams p = bench_params();
  const SparseSplitHamiltonian h = build_sparse_hamiltonian(p, s);
  Vector psi = fock_vector(s, {0, 0, 0, 0});
  for (auto _ : state)
    psi = schrodinger_evolve(h, p, s, std::move(psi), 0.0, 0.01, 10);
}
BENCHMARK(bm_sparse_step);

}  // namespace

BENCHMARK_MAIN();
