#pragma once

#include <complex>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace cavepr {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Multi-mode truncated Fock space.
///
/// Basis ordering: modes appear in declaration order and the Fock index of
/// the *last* declared mode varies fastest.  Equivalently, a global operator
/// built from single-mode operators O_k is kron(O_0, O_1, ..., O_{M-1}).
/// The flat index of |n_0, n_1, ..., n_{M-1}> is
///   ((n_0 * d_1 + n_1) * d_2 + n_2) * ...
class ModeSpace {
 public:
  ModeSpace() = default;
  ModeSpace(std::initializer_list<std::pair<std::string, int>> modes);
  explicit ModeSpace(std::vector<std::pair<std::string, int>> modes);

  int num_modes() const { return static_cast<int>(dims_.size()); }
  int dim(int mode) const { return dims_.at(mode); }
  int dim(std::string_view label) const { return dims_.at(index(label)); }
  long total_dim() const { return total_; }
  const std::string& label(int mode) const { return labels_.at(mode); }
  bool has_mode(std::string_view label) const;

  /// Index of a mode by label; throws std::out_of_range for unknown labels.
  int index(std::string_view label) const;

  /// Stride of a mode in the flat basis index (fastest-varying mode has
  /// stride 1).
  long stride(int mode) const;

  bool operator==(const ModeSpace& other) const {
    return labels_ == other.labels_ && dims_ == other.dims_;
  }
  bool operator!=(const ModeSpace& other) const { return !(*this == other); }

 private:
  void validate() const;

  std::vector<std::string> labels_;
  std::vector<int> dims_;
  long total_ = 1;
};

/// Dense operator on a truncated multi-mode Fock space.
struct Operator {
  ModeSpace space;
  Matrix matrix;

  Operator dagger() const { return {space, matrix.adjoint()}; }
};

/// Density matrix on a truncated multi-mode Fock space.
struct DensityState {
  ModeSpace space;
  Matrix matrix;

  /// Throws std::invalid_argument unless trace, Hermiticity and positivity
  /// hold within the documented tolerances (1e-10, 1e-10, -1e-8).
  void validate() const;
};

Operator identity(const ModeSpace& space);

/// Ladder operator: sqrt(n) on the sub-diagonal of the selected mode,
/// identity on all other modes.
Operator annihilation(const ModeSpace& space, std::string_view mode);
Operator creation(const ModeSpace& space, std::string_view mode);
Operator number_operator(const ModeSpace& space, std::string_view mode);

/// b + b^dag on the selected mode (dimensionless position quadrature).
Operator position_quadrature(const ModeSpace& space, std::string_view mode);

/// Kronecker embedding of a single-mode operator, identities elsewhere.
/// The matrix dimension must equal the truncation of the selected mode.
Operator tensor_embed(const Matrix& op, const ModeSpace& space,
                      std::string_view mode);

/// trace(rho * op); spaces must match.
Complex expectation(const DensityState& state, const Operator& op);
Complex expectation(const ModeSpace& space, const Vector& psi,
                    const Operator& op);

/// |n> on the selected mode, vacuum elsewhere (as a pure state vector).
Vector fock_vector(const ModeSpace& space,
                   const std::vector<int>& occupations);

DensityState vacuum_state(const ModeSpace& space);

/// Truncated Gibbs state of the selected mode at mean occupation nbar,
/// renormalized over the truncation; all other modes in vacuum.
DensityState thermal_state(const ModeSpace& space, std::string_view mode,
                           double nbar);

/// Reduced state over the listed modes (declaration order preserved).
DensityState partial_trace(const DensityState& state,
                           const std::vector<std::string>& keep);
DensityState partial_trace(const ModeSpace& space, const Vector& psi,
                           const std::vector<std::string>& keep);

/// Uhlmann fidelity F = (tr sqrt(sqrt(a) b sqrt(a)))^2.
double fidelity(const DensityState& a, const DensityState& b);

double purity(const DensityState& state);

/// Largest population found in the top Fock level of any mode.  Runs are
/// flagged truncation-unsafe when this exceeds 1e-4.
double top_level_population(const DensityState& state);
double top_level_population(const ModeSpace& space, const Vector& psi);

inline constexpr double kTruncationUnsafe = 1e-4;

}  // namespace cavepr
