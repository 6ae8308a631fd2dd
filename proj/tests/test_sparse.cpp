#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include <unsupported/Eigen/MatrixFunctions>

#include <cavepr/model.hpp>
#include <cavepr/sparse_ops.hpp>

using namespace cavepr;

namespace {

SystemParams sample_params(std::mt19937& rng) {
  std::uniform_real_distribution<double> u(0.1, 2.0),
      ang(0.0, 2.0 * std::numbers::pi);
  SystemParams p;
  p.nu = u(rng);
  p.Delta = -10.0 * u(rng);
  p.delta1 = p.nu;
  p.delta2 = -p.nu;
  p.Omega.amplitude = u(rng);
  p.g1 = std::polar(u(rng), ang(rng));
  p.g2 = std::polar(u(rng), ang(rng));
  p.phi1 = ang(rng);
  p.phi2 = ang(rng);
  p.theta_c = ang(rng);
  p.theta_L = ang(rng);
  p.eta = 0.1;
  return p;
}

}  // namespace

TEST_CASE("assemble_sparse matches dense kron") {
  const ModeSpace s{{"m1", 3}, {"m2", 4}};
  Matrix a = Matrix::Random(3, 3), b = Matrix::Random(4, 4);
  const SparseMatrix sp =
      assemble_sparse(s, {{Complex(2.0, 1.0), {{"m1", a}, {"m2", b}}}});
  Matrix dense = Matrix::Zero(12, 12);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      dense.block(4 * i, 4 * j, 4, 4) = Complex(2.0, 1.0) * a(i, j) * b;
  CHECK((Matrix(sp) - dense).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("sparse hamiltonian matches dense builder") {
  std::mt19937 rng(41);
  const ModeSpace s{{"dipole", 2}, {"motion", 4}, {"cav1", 3}, {"cav2", 3}};
  for (int k = 0; k < 5; ++k) {
    const SystemParams p = sample_params(rng);
    const SplitHamiltonian dense = build_hamiltonian_split(p, s);
    const SparseSplitHamiltonian sparse = build_sparse_hamiltonian(p, s);
    CHECK((Matrix(sparse.h_static) - dense.h_static.matrix)
              .cwiseAbs()
              .maxCoeff() < 1e-12);
    CHECK((Matrix(sparse.h_drive) - dense.h_drive.matrix)
              .cwiseAbs()
              .maxCoeff() < 1e-12);
  }
}

TEST_CASE("sparse observables") {
  const ModeSpace s{{"cav1", 4}, {"cav2", 5}};
  const SparseMatrix n1 = sparse_number_operator(s, "cav1");
  CHECK((Matrix(n1) - number_operator(s, "cav1").matrix).cwiseAbs().maxCoeff() <
        1e-14);
  const SparseMatrix aa = sparse_pair_annihilation(s, "cav1", "cav2");
  const Matrix dense =
      annihilation(s, "cav1").matrix * annihilation(s, "cav2").matrix;
  CHECK((Matrix(aa) - dense).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("schrodinger evolution matches matrix exponential") {
  std::mt19937 rng(43);
  const ModeSpace s{{"dipole", 2}, {"motion", 3}, {"cav1", 3}};
  SystemParams p = sample_params(rng);
  const SparseSplitHamiltonian h = build_sparse_hamiltonian(p, s);
  const Matrix full =
      Matrix(h.h_static) + p.Omega.amplitude * Matrix(h.h_drive);

  Vector psi0 = fock_vector(s, {0, 0, 0});
  const double t = 1.3;
  double top = 0.0;
  const Vector psi = schrodinger_evolve(h, p, s, psi0, 0.0, t, 4000, &top);

  const Matrix u = (Complex(0.0, -1.0) * t * full).exp();
  Vector exact = u * psi0;
  exact.normalize();
  CHECK((psi - exact).norm() < 1e-6);
  CHECK(top >= 0.0);
}

TEST_CASE("schrodinger evolution with pulse envelope") {
  std::mt19937 rng(44);
  const ModeSpace s{{"dipole", 2}, {"motion", 3}, {"cav1", 3}};
  SystemParams p = sample_params(rng);
  const double amp = p.Omega.amplitude;
  const SparseSplitHamiltonian h = build_sparse_hamiltonian(p, s);
  Vector psi0 = fock_vector(s, {0, 0, 0});

  // constant callback must match the constant amplitude path
  const Vector a = schrodinger_evolve(h, p, s, psi0, 0.0, 0.8, 2000);
  p.Omega.shape = [amp](double) { return amp; };
  const Vector b = schrodinger_evolve(h, p, s, psi0, 0.0, 0.8, 2000);
  CHECK((a - b).norm() < 1e-12);

  CHECK_THROWS_AS(schrodinger_evolve(h, p, s, psi0, 0.0, 1.0, 0),
                  std::invalid_argument);
}
