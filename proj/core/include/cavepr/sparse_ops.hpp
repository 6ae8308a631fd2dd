#pragma once

#include <string>
#include <utility>
#include <vector>

#include <Eigen/Sparse>

#include "cavepr/fock.hpp"
#include "cavepr/params.hpp"

namespace cavepr {

using SparseMatrix = Eigen::SparseMatrix<Complex>;

/// coeff * kron-product of local matrices on the named modes, identity on
/// all others.
struct ProductTerm {
  Complex coeff{1.0, 0.0};
  std::vector<std::pair<std::string, Matrix>> locals;
};

/// Assemble a sum of product terms into a sparse operator on the full space.
SparseMatrix assemble_sparse(const ModeSpace& space,
                             const std::vector<ProductTerm>& terms);

/// Sparse mirror of the dense split Hamiltonian; H(t) = h_static +
/// Omega(t) h_drive.  Agreement with the dense builder is pinned by tests.
struct SparseSplitHamiltonian {
  SparseMatrix h_static;
  SparseMatrix h_drive;
};

SparseSplitHamiltonian build_sparse_hamiltonian(const SystemParams& params,
                                                const ModeSpace& space);

SparseMatrix sparse_number_operator(const ModeSpace& space,
                                    std::string_view mode);

/// Sparse a_j a_k product (two distinct modes).
SparseMatrix sparse_pair_annihilation(const ModeSpace& space,
                                      std::string_view mode_j,
                                      std::string_view mode_k);

/// Fixed-step RK4 Schrodinger integration, psi' = -i H(t) psi.
/// Returns the evolved (renormalized) state; max_top tracks the largest
/// top-level population seen at the sampled steps.
Vector schrodinger_evolve(const SparseSplitHamiltonian& h,
                          const SystemParams& params, const ModeSpace& space,
                          Vector psi, double t0, double t1, long steps,
                          double* max_top = nullptr);

}  // namespace cavepr
