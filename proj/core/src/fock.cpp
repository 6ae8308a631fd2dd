#include "cavepr/fock.hpp"

#include <cmath>
#include <set>

#include <Eigen/Eigenvalues>

namespace cavepr {

ModeSpace::ModeSpace(std::initializer_list<std::pair<std::string, int>> modes)
    : ModeSpace(std::vector<std::pair<std::string, int>>(modes)) {}

ModeSpace::ModeSpace(std::vector<std::pair<std::string, int>> modes) {
  labels_.reserve(modes.size());
  dims_.reserve(modes.size());
  for (auto& [label, dim] : modes) {
    labels_.push_back(std::move(label));
    dims_.push_back(dim);
    total_ *= dim;
  }
  validate();
}

void ModeSpace::validate() const {
  std::set<std::string> seen;
  for (std::size_t k = 0; k < labels_.size(); ++k) {
    if (dims_[k] < 2)
      throw std::invalid_argument("mode '" + labels_[k] + "' needs dim >= 2");
    if (labels_[k] == "dipole" && dims_[k] != 2)
      throw std::invalid_argument("dipole mode must have dim 2");
    if (!seen.insert(labels_[k]).second)
      throw std::invalid_argument("duplicate mode label '" + labels_[k] + "'");
  }
}

bool ModeSpace::has_mode(std::string_view label) const {
  for (const auto& l : labels_)
    if (l == label) return true;
  return false;
}

int ModeSpace::index(std::string_view label) const {
  for (std::size_t k = 0; k < labels_.size(); ++k)
    if (labels_[k] == label) return static_cast<int>(k);
  throw std::out_of_range("unknown mode label '" + std::string(label) + "'");
}

long ModeSpace::stride(int mode) const {
  long s = 1;
  for (int k = num_modes() - 1; k > mode; --k) s *= dims_[k];
  return s;
}

void DensityState::validate() const {
  if (matrix.rows() != space.total_dim() || matrix.cols() != space.total_dim())
    throw std::invalid_argument("density matrix dimension mismatch");
  if (std::abs(matrix.trace() - 1.0) > 1e-10)
    throw std::invalid_argument("density matrix trace deviates from 1");
  if ((matrix - matrix.adjoint()).cwiseAbs().maxCoeff() > 1e-10)
    throw std::invalid_argument("density matrix is not Hermitian");
  Eigen::SelfAdjointEigenSolver<Matrix> es(matrix, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -1e-8)
    throw std::invalid_argument("density matrix has negative eigenvalues");
}

Operator identity(const ModeSpace& space) {
  return {space, Matrix::Identity(space.total_dim(), space.total_dim())};
}

namespace {

Matrix single_mode_annihilation(int dim) {
  Matrix a = Matrix::Zero(dim, dim);
  for (int n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(double(n));
  return a;
}

}  // namespace

Operator annihilation(const ModeSpace& space, std::string_view mode) {
  return tensor_embed(single_mode_annihilation(space.dim(mode)), space, mode);
}

Operator creation(const ModeSpace& space, std::string_view mode) {
  return tensor_embed(single_mode_annihilation(space.dim(mode)).adjoint(),
                      space, mode);
}

Operator number_operator(const ModeSpace& space, std::string_view mode) {
  const int d = space.dim(mode);
  Matrix n = Matrix::Zero(d, d);
  for (int k = 0; k < d; ++k) n(k, k) = double(k);
  return tensor_embed(n, space, mode);
}

Operator position_quadrature(const ModeSpace& space, std::string_view mode) {
  const Matrix a = single_mode_annihilation(space.dim(mode));
  return tensor_embed(a + a.adjoint().eval(), space, mode);
}

Operator tensor_embed(const Matrix& op, const ModeSpace& space,
                      std::string_view mode) {
  const int m = space.index(mode);
  const int d = space.dim(m);
  if (op.rows() != d || op.cols() != d)
    throw std::invalid_argument("tensor_embed: operator dimension mismatch");

  const long right = space.stride(m);
  const long left = space.total_dim() / (right * d);
  const long total = space.total_dim();

  // kron(I_left, op, I_right) assembled directly.
  Matrix out = Matrix::Zero(total, total);
  for (long l = 0; l < left; ++l) {
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) {
        if (op(i, j) == Complex(0)) continue;
        const long row0 = (l * d + i) * right;
        const long col0 = (l * d + j) * right;
        for (long r = 0; r < right; ++r) out(row0 + r, col0 + r) = op(i, j);
      }
    }
  }
  return {space, std::move(out)};
}

Complex expectation(const DensityState& state, const Operator& op) {
  if (state.space != op.space)
    throw std::invalid_argument("expectation: mode spaces differ");
  return (state.matrix * op.matrix).trace();
}

Complex expectation(const ModeSpace& space, const Vector& psi,
                    const Operator& op) {
  if (space != op.space || psi.size() != space.total_dim())
    throw std::invalid_argument("expectation: mode spaces differ");
  return psi.dot(op.matrix * psi);
}

Vector fock_vector(const ModeSpace& space, const std::vector<int>& occ) {
  if (static_cast<int>(occ.size()) != space.num_modes())
    throw std::invalid_argument("fock_vector: wrong number of occupations");
  long idx = 0;
  for (int m = 0; m < space.num_modes(); ++m) {
    if (occ[m] < 0 || occ[m] >= space.dim(m))
      throw std::invalid_argument("fock_vector: occupation out of range");
    idx = idx * space.dim(m) + occ[m];
  }
  Vector psi = Vector::Zero(space.total_dim());
  psi(idx) = 1.0;
  return psi;
}

DensityState vacuum_state(const ModeSpace& space) {
  Matrix rho = Matrix::Zero(space.total_dim(), space.total_dim());
  rho(0, 0) = 1.0;
  return {space, std::move(rho)};
}

DensityState thermal_state(const ModeSpace& space, std::string_view mode,
                           double nbar) {
  if (nbar < 0) throw std::invalid_argument("thermal_state: nbar < 0");
  const int d = space.dim(mode);
  Eigen::VectorXd p(d);
  if (nbar == 0) {
    p.setZero();
    p(0) = 1.0;
  } else {
    const double q = nbar / (1.0 + nbar);
    for (int n = 0; n < d; ++n) p(n) = std::pow(q, n);
    p /= p.sum();
  }
  Matrix local = Matrix::Zero(d, d);
  for (int n = 0; n < d; ++n) local(n, n) = p(n);

  // Other modes in vacuum: project the embedded diagonal onto vacuum
  // elsewhere by building the full product state directly.
  Matrix rho = Matrix::Zero(space.total_dim(), space.total_dim());
  const int m = space.index(mode);
  const long right = space.stride(m);
  for (int n = 0; n < d; ++n) {
    const long idx = n * right;  // all other occupations zero
    rho(idx, idx) = p(n);
  }
  return {space, std::move(rho)};
}

namespace {

// Shared index machinery for partial traces: flat index of the kept modes,
// flat index of the traced modes, recombined into the full-space index.
struct TraceIndex {
  std::vector<int> keep_modes, drop_modes;
  long keep_dim = 1, drop_dim = 1;
  const ModeSpace* space;

  TraceIndex(const ModeSpace& s, const std::vector<std::string>& keep)
      : space(&s) {
    std::set<int> kept;
    for (const auto& l : keep) kept.insert(s.index(l));
    for (int m = 0; m < s.num_modes(); ++m) {
      if (kept.count(m)) {
        keep_modes.push_back(m);
        keep_dim *= s.dim(m);
      } else {
        drop_modes.push_back(m);
        drop_dim *= s.dim(m);
      }
    }
  }

  long full_index(long k, long t) const {
    std::vector<int> occ(space->num_modes());
    for (auto it = keep_modes.rbegin(); it != keep_modes.rend(); ++it) {
      occ[*it] = static_cast<int>(k % space->dim(*it));
      k /= space->dim(*it);
    }
    for (auto it = drop_modes.rbegin(); it != drop_modes.rend(); ++it) {
      occ[*it] = static_cast<int>(t % space->dim(*it));
      t /= space->dim(*it);
    }
    long idx = 0;
    for (int m = 0; m < space->num_modes(); ++m)
      idx = idx * space->dim(m) + occ[m];
    return idx;
  }

  ModeSpace reduced_space() const {
    std::vector<std::pair<std::string, int>> modes;
    for (int m : keep_modes)
      modes.emplace_back(space->label(m), space->dim(m));
    return ModeSpace(std::move(modes));
  }
};

}  // namespace

DensityState partial_trace(const DensityState& state,
                           const std::vector<std::string>& keep) {
  TraceIndex ti(state.space, keep);
  Matrix out = Matrix::Zero(ti.keep_dim, ti.keep_dim);
  for (long i = 0; i < ti.keep_dim; ++i)
    for (long j = 0; j < ti.keep_dim; ++j)
      for (long t = 0; t < ti.drop_dim; ++t)
        out(i, j) += state.matrix(ti.full_index(i, t), ti.full_index(j, t));
  return {ti.reduced_space(), std::move(out)};
}

DensityState partial_trace(const ModeSpace& space, const Vector& psi,
                           const std::vector<std::string>& keep) {
  TraceIndex ti(space, keep);
  // rho_keep(i,j) = sum_t psi(i,t) conj(psi(j,t))
  Matrix amp(ti.keep_dim, ti.drop_dim);
  for (long i = 0; i < ti.keep_dim; ++i)
    for (long t = 0; t < ti.drop_dim; ++t)
      amp(i, t) = psi(ti.full_index(i, t));
  Matrix out = amp * amp.adjoint();
  return {ti.reduced_space(), std::move(out)};
}

namespace {

Matrix hermitian_sqrt(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(m);
  Eigen::VectorXd ev = es.eigenvalues().cwiseMax(0.0);
  return es.eigenvectors() * ev.cwiseSqrt().asDiagonal() *
         es.eigenvectors().adjoint();
}

}  // namespace

double fidelity(const DensityState& a, const DensityState& b) {
  if (a.space != b.space)
    throw std::invalid_argument("fidelity: mode spaces differ");
  const Matrix sa = hermitian_sqrt(a.matrix);
  const Matrix inner = hermitian_sqrt(sa * b.matrix * sa);
  const double f = inner.trace().real();
  return f * f;
}

double purity(const DensityState& state) {
  return (state.matrix * state.matrix).trace().real();
}

namespace {

template <typename PopFn>
double max_top_population(const ModeSpace& space, PopFn&& pop) {
  double worst = 0.0;
  for (int m = 0; m < space.num_modes(); ++m) {
    // a two-level mode is a genuine qubit, not a truncated ladder; its upper
    // level carries physical population
    if (space.dim(m) <= 2) continue;
    const int top = space.dim(m) - 1;
    const long right = space.stride(m);
    const long left = space.total_dim() / (right * space.dim(m));
    double p = 0.0;
    for (long l = 0; l < left; ++l)
      for (long r = 0; r < right; ++r)
        p += pop((l * space.dim(m) + top) * right + r);
    worst = std::max(worst, p);
  }
  return worst;
}

}  // namespace

double top_level_population(const DensityState& state) {
  return max_top_population(state.space, [&](long i) {
    return state.matrix(i, i).real();
  });
}

double top_level_population(const ModeSpace& space, const Vector& psi) {
  return max_top_population(space, [&](long i) { return std::norm(psi(i)); });
}

}  // namespace cavepr
