#include "cavepr/sparse_ops.hpp"

#include <cmath>

namespace cavepr {

namespace {

struct LocalEntry {
  int row, col;
  Complex value;
};

// Nonzero entries of the local matrix attached to one mode (identity when
// the mode does not appear in the term).
std::vector<std::vector<LocalEntry>> local_entries(
    const ModeSpace& space, const ProductTerm& term) {
  std::vector<std::vector<LocalEntry>> entries(space.num_modes());
  for (int m = 0; m < space.num_modes(); ++m) {
    const Matrix* local = nullptr;
    for (const auto& [label, mat] : term.locals)
      if (space.label(m) == label) local = &mat;
    if (local) {
      if (local->rows() != space.dim(m) || local->cols() != space.dim(m))
        throw std::invalid_argument("assemble_sparse: local dim mismatch on '" +
                                    space.label(m) + "'");
      for (int i = 0; i < local->rows(); ++i)
        for (int j = 0; j < local->cols(); ++j)
          if ((*local)(i, j) != Complex(0))
            entries[m].push_back({i, j, (*local)(i, j)});
    } else {
      for (int i = 0; i < space.dim(m); ++i)
        entries[m].push_back({i, i, Complex(1.0)});
    }
  }
  return entries;
}

}  // namespace

SparseMatrix assemble_sparse(const ModeSpace& space,
                             const std::vector<ProductTerm>& terms) {
  std::vector<Eigen::Triplet<Complex>> triplets;
  const int nm = space.num_modes();
  for (const auto& term : terms) {
    const auto entries = local_entries(space, term);
    // Odometer over the nonzero entries of every mode.
    std::vector<std::size_t> pos(nm, 0);
    while (true) {
      long row = 0, col = 0;
      Complex value = term.coeff;
      for (int m = 0; m < nm; ++m) {
        const LocalEntry& e = entries[m][pos[m]];
        row = row * space.dim(m) + e.row;
        col = col * space.dim(m) + e.col;
        value *= e.value;
      }
      if (value != Complex(0))
        triplets.emplace_back(static_cast<int>(row), static_cast<int>(col),
                              value);
      int m = nm - 1;
      for (; m >= 0; --m) {
        if (++pos[m] < entries[m].size()) break;
        pos[m] = 0;
      }
      if (m < 0) break;
    }
  }
  SparseMatrix out(space.total_dim(), space.total_dim());
  out.setFromTriplets(triplets.begin(), triplets.end());
  return out;
}

namespace {

Matrix local_annihilation(int dim) {
  Matrix a = Matrix::Zero(dim, dim);
  for (int n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(double(n));
  return a;
}

Matrix local_number(int dim) {
  Matrix n = Matrix::Zero(dim, dim);
  for (int k = 0; k < dim; ++k) n(k, k) = double(k);
  return n;
}

}  // namespace

SparseSplitHamiltonian build_sparse_hamiltonian(const SystemParams& p,
                                                const ModeSpace& space) {
  p.validate();
  const int db = space.dim("motion");
  const Matrix xb = local_annihilation(db) + local_annihilation(db).adjoint();
  const Matrix xb2 = xb * xb;
  Matrix sigma = Matrix::Zero(2, 2);
  sigma(0, 1) = 1.0;
  Matrix proj_e = Matrix::Zero(2, 2);
  proj_e(1, 1) = 1.0;

  const double ec = p.eta * std::cos(p.theta_c);
  const double el = p.eta * std::cos(p.theta_L);
  const Complex i(0.0, 1.0);

  std::vector<ProductTerm> stat;
  stat.push_back({-p.Delta, {{"dipole", proj_e}}});
  stat.push_back({p.nu, {{"motion", local_number(db)}}});
  stat.push_back({-p.delta1, {{"cav1", local_number(space.dim("cav1"))}}});
  if (space.has_mode("cav2"))
    stat.push_back({-p.delta2, {{"cav2", local_number(space.dim("cav2"))}}});

  auto add_cavity = [&](const char* label, Complex g, double phi) {
    const Matrix a = local_annihilation(space.dim(label));
    const Matrix mode_fn = std::cos(phi) * Matrix::Identity(db, db) -
                           ec * std::sin(phi) * xb -
                           0.5 * ec * ec * std::cos(phi) * xb2;
    stat.push_back({g,
                    {{"dipole", sigma.adjoint()},
                     {std::string(label), a},
                     {"motion", mode_fn}}});
    stat.push_back({std::conj(g),
                    {{"dipole", sigma},
                     {std::string(label), Matrix(a.adjoint())},
                     {"motion", Matrix(mode_fn.adjoint())}}});
  };
  add_cavity("cav1", p.g1, p.phi1);
  if (space.has_mode("cav2")) add_cavity("cav2", p.g2, p.phi2);

  const Matrix drive_fn =
      Matrix::Identity(db, db) + i * el * xb - 0.5 * el * el * xb2;
  std::vector<ProductTerm> drive;
  drive.push_back(
      {1.0, {{"dipole", sigma.adjoint()}, {"motion", drive_fn}}});
  drive.push_back(
      {1.0, {{"dipole", sigma}, {"motion", Matrix(drive_fn.adjoint())}}});

  return {assemble_sparse(space, stat), assemble_sparse(space, drive)};
}

SparseMatrix sparse_number_operator(const ModeSpace& space,
                                    std::string_view mode) {
  return assemble_sparse(
      space, {{1.0, {{std::string(mode), local_number(space.dim(mode))}}}});
}

SparseMatrix sparse_pair_annihilation(const ModeSpace& space,
                                      std::string_view mode_j,
                                      std::string_view mode_k) {
  return assemble_sparse(
      space,
      {{1.0,
        {{std::string(mode_j), local_annihilation(space.dim(mode_j))},
         {std::string(mode_k), local_annihilation(space.dim(mode_k))}}}});
}

Vector schrodinger_evolve(const SparseSplitHamiltonian& h,
                          const SystemParams& params, const ModeSpace& space,
                          Vector psi, double t0, double t1, long steps,
                          double* max_top) {
  if (steps < 1) throw std::invalid_argument("schrodinger_evolve: steps < 1");
  const double dt = (t1 - t0) / double(steps);
  const Complex mi(0.0, -1.0);
  const bool constant = !params.Omega.time_dependent();

  SparseMatrix h_const;
  if (constant) h_const = h.h_static + params.Omega.amplitude * h.h_drive;

  auto rhs = [&](double t, const Vector& v) -> Vector {
    if (constant) return mi * (h_const * v);
    return mi * (h.h_static * v + params.Omega(t) * (h.h_drive * v));
  };

  double worst_top = 0.0;
  const long monitor_every = std::max<long>(1, steps / 64);
  for (long s = 0; s < steps; ++s) {
    const double t = t0 + s * dt;
    const Vector k1 = rhs(t, psi);
    const Vector k2 = rhs(t + 0.5 * dt, psi + 0.5 * dt * k1);
    const Vector k3 = rhs(t + 0.5 * dt, psi + 0.5 * dt * k2);
    const Vector k4 = rhs(t + dt, psi + dt * k3);
    psi += dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    if (max_top && (s % monitor_every == 0 || s == steps - 1))
      worst_top = std::max(worst_top, top_level_population(space, psi));
  }
  psi.normalize();
  if (max_top) *max_top = worst_top;
  return psi;
}

}  // namespace cavepr
