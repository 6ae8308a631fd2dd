#include "cavepr/model.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace cavepr {

namespace {

Matrix sigma_minus() {
  Matrix s = Matrix::Zero(2, 2);
  s(0, 1) = 1.0;  // |g><e| with basis index 0 = ground
  return s;
}

Matrix excited_projector() {
  Matrix p = Matrix::Zero(2, 2);
  p(1, 1) = 1.0;
  return p;
}

void require_modes(const SystemParams& params, const ModeSpace& space) {
  params.validate();
  if (!space.has_mode("dipole"))
    throw std::invalid_argument("model: space lacks the dipole mode");
  if (!space.has_mode("motion"))
    throw std::invalid_argument("model: space lacks the motion mode");
  if (!space.has_mode("cav1"))
    throw std::invalid_argument("model: space lacks cavity mode cav1");
}

}  // namespace

SplitHamiltonian build_hamiltonian_split(const SystemParams& p,
                                         const ModeSpace& space) {
  require_modes(p, space);
  const long dim = space.total_dim();

  const Operator sigma = tensor_embed(sigma_minus(), space, "dipole");
  const Matrix sigma_dag = sigma.matrix.adjoint();
  const Operator x_mec = position_quadrature(space, "motion");
  const Matrix x2 = x_mec.matrix * x_mec.matrix;

  Matrix h_static = Matrix::Zero(dim, dim);

  // Rotating frame at the laser frequency: dipole at -Delta, motion at nu,
  // cavity mode j at omega_j - omega_L = -delta_j.
  h_static -= p.Delta * tensor_embed(excited_projector(), space, "dipole").matrix;
  h_static += p.nu * number_operator(space, "motion").matrix;
  h_static -= p.delta1 * number_operator(space, "cav1").matrix;
  if (space.has_mode("cav2"))
    h_static -= p.delta2 * number_operator(space, "cav2").matrix;

  // Atom-cavity coupling through second Lamb-Dicke order; cos(phi) tan(phi)
  // written as sin(phi) so phi = pi/2 stays regular.
  const double ec = p.eta * std::cos(p.theta_c);
  auto cavity_term = [&](const char* label, std::complex<double> g,
                         double phi) {
    const Operator a = annihilation(space, label);
    const Matrix mode_fn = std::cos(phi) * Matrix::Identity(dim, dim) -
                           ec * std::sin(phi) * x_mec.matrix -
                           0.5 * ec * ec * std::cos(phi) * x2;
    const Matrix term = g * a.matrix * sigma_dag * mode_fn;
    h_static += term + term.adjoint().eval();
  };
  cavity_term("cav1", p.g1, p.phi1);
  if (space.has_mode("cav2")) cavity_term("cav2", p.g2, p.phi2);

  // Laser drive through second Lamb-Dicke order; the envelope Omega(t)
  // multiplies this block.
  const std::complex<double> i(0.0, 1.0);
  const double el = p.eta * std::cos(p.theta_L);
  const Matrix drive_half =
      sigma_dag * (Matrix::Identity(dim, dim) + i * el * x_mec.matrix -
                   0.5 * el * el * x2);
  Matrix h_drive = drive_half + drive_half.adjoint().eval();

  return {{space, std::move(h_static)}, {space, std::move(h_drive)}};
}

Operator build_hamiltonian(const SystemParams& p, const ModeSpace& space,
                           double t) {
  return build_hamiltonian_split(p, space).at(p, t);
}

DissipatorSet build_dissipators(const SystemParams& p,
                                const ModeSpace& space) {
  require_modes(p, space);
  DissipatorSet set;
  if (p.kappa1 > 0)
    set.channels.push_back({annihilation(space, "cav1"), p.kappa1, false});
  if (p.kappa2 > 0 && space.has_mode("cav2"))
    set.channels.push_back({annihilation(space, "cav2"), p.kappa2, false});
  if (p.gamma > 0)
    set.channels.push_back({tensor_embed(sigma_minus(), space, "dipole"),
                            p.gamma / 2.0, p.eta > 0});
  return set;
}

void gauss_legendre(int order, std::vector<double>& nodes,
                    std::vector<double>& weights) {
  if (order < 2) throw std::invalid_argument("gauss_legendre: order < 2");
  nodes.resize(order);
  weights.resize(order);
  for (int k = 0; k < order; ++k) {
    // Newton iteration from the Chebyshev-based initial guess.
    double x = std::cos(std::numbers::pi * (k + 0.75) / (order + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int n = 2; n <= order; ++n) {
        const double p2 = ((2 * n - 1) * x * p1 - (n - 1) * p0) / n;
        p0 = p1;
        p1 = p2;
      }
      dp = order * (x * p1 - p0) / (x * x - 1.0);
      const double step = p1 / dp;
      x -= step;
      if (std::abs(step) < 1e-15) break;
    }
    nodes[k] = x;
    weights[k] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
}

DensityState recoil_average(const DensityState& rho, const SystemParams& p,
                            int quadrature_order,
                            const std::function<double(double)>& pattern) {
  if (!rho.space.has_mode("motion"))
    throw std::invalid_argument("recoil_average: no motion mode");
  if (quadrature_order < 2)
    throw std::invalid_argument("recoil_average: quadrature_order < 2");

  std::vector<double> u, w;
  gauss_legendre(quadrature_order, u, w);

  double norm = 0.0;
  for (int k = 0; k < quadrature_order; ++k) norm += w[k] * pattern(u[k]);
  if (std::abs(norm - 1.0) > 1e-8)
    throw std::invalid_argument(
        "recoil_average: recoil pattern does not integrate to 1");

  if (p.eta == 0.0) return rho;

  // e^{-i eta u X} through one eigendecomposition of the motional position
  // quadrature, reused for every node.
  const int d = rho.space.dim("motion");
  Matrix x_local = Matrix::Zero(d, d);
  for (int n = 1; n < d; ++n) {
    x_local(n - 1, n) = std::sqrt(double(n));
    x_local(n, n - 1) = std::sqrt(double(n));
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(x_local);
  const Matrix v = es.eigenvectors();
  const Eigen::VectorXd ev = es.eigenvalues();

  Matrix out = Matrix::Zero(rho.matrix.rows(), rho.matrix.cols());
  for (int k = 0; k < quadrature_order; ++k) {
    Vector phase(d);
    for (int n = 0; n < d; ++n)
      phase(n) = std::polar(1.0, -p.eta * u[k] * ev(n));
    const Matrix kick_local = v * phase.asDiagonal() * v.adjoint();
    const Operator kick = tensor_embed(kick_local, rho.space, "motion");
    out += w[k] * pattern(u[k]) * kick.matrix * rho.matrix *
           kick.matrix.adjoint();
  }
  return {rho.space, std::move(out)};
}

}  // namespace cavepr
