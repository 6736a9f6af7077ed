#include "chiralmag/fock.hpp"

#include <cmath>

namespace chiralmag {

FockSpace::FockSpace(std::vector<int> mode_dims) : dims_(std::move(mode_dims)) {
  if (dims_.empty()) throw std::invalid_argument("FockSpace: no modes");
  for (int d : dims_) {
    if (d < 2) throw std::invalid_argument("FockSpace: every mode dim must be >= 2");
  }
  strides_.assign(dims_.size(), 1);
  total_ = 1;
  for (std::size_t k = dims_.size(); k-- > 0;) {
    strides_[k] = total_;
    total_ *= dims_[k];
  }
}

Eigen::Index FockSpace::index_of(const std::vector<int>& occupation) const {
  if (occupation.size() != dims_.size())
    throw std::invalid_argument("FockSpace::index_of: mode count mismatch");
  Eigen::Index idx = 0;
  for (std::size_t k = 0; k < dims_.size(); ++k) {
    if (occupation[k] < 0 || occupation[k] >= dims_[k])
      throw std::out_of_range("FockSpace::index_of: occupation out of range");
    idx += strides_[k] * occupation[k];
  }
  return idx;
}

std::vector<int> FockSpace::occupation_of(Eigen::Index index) const {
  if (index < 0 || index >= total_)
    throw std::out_of_range("FockSpace::occupation_of: index out of range");
  std::vector<int> occ(dims_.size());
  for (std::size_t k = 0; k < dims_.size(); ++k) {
    occ[k] = static_cast<int>(index / strides_[k]);
    index %= strides_[k];
  }
  return occ;
}

double hermiticity_error(const Matrix& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

LinearOp::LinearOp(FockSpace space_, Matrix matrix_, bool hermitian_)
    : space(std::move(space_)), matrix(std::move(matrix_)), hermitian(hermitian_) {
  if (matrix.rows() != space.total_dim() || matrix.cols() != space.total_dim())
    throw std::invalid_argument("LinearOp: matrix dimension does not match space");
  if (hermitian && hermiticity_error(matrix) > kHermitianTol)
    throw std::invalid_argument("LinearOp: operator flagged Hermitian is not");
}

Ket::Ket(FockSpace space_, Vector amplitudes_)
    : space(std::move(space_)), amplitudes(std::move(amplitudes_)) {
  if (amplitudes.size() != space.total_dim())
    throw std::invalid_argument("Ket: amplitude length does not match space");
  if (std::abs(amplitudes.norm() - 1.0) > kNormTol)
    throw std::invalid_argument("Ket: state is not normalized");
}

DensityOp::DensityOp(FockSpace space_, Matrix matrix_)
    : space(std::move(space_)), matrix(std::move(matrix_)) {
  if (matrix.rows() != space.total_dim() || matrix.cols() != space.total_dim())
    throw std::invalid_argument("DensityOp: matrix dimension does not match space");
  if (hermiticity_error(matrix) > kHermitianTol)
    throw std::invalid_argument("DensityOp: matrix is not Hermitian");
  if (std::abs(matrix.trace().real() - 1.0) > kTraceTol ||
      std::abs(matrix.trace().imag()) > kTraceTol)
    throw std::invalid_argument("DensityOp: trace is not 1");
}

void DensityOp::validate_positive(double tol) const {
  Eigen::SelfAdjointEigenSolver<Matrix> es(matrix, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -tol)
    throw std::runtime_error("DensityOp: negative eigenvalue " +
                             std::to_string(es.eigenvalues().minCoeff()));
}

LinearOp identity_op(const FockSpace& space) {
  return LinearOp(space, Matrix::Identity(space.total_dim(), space.total_dim()), true);
}

LinearOp annihilation(const FockSpace& space, int mode) {
  if (mode < 0 || mode >= space.n_modes())
    throw std::invalid_argument("annihilation: mode out of range");
  const int d = space.dim(mode);
  Matrix local = Matrix::Zero(d, d);
  for (int n = 1; n < d; ++n) local(n - 1, n) = std::sqrt(static_cast<double>(n));
  return embed(space, mode, LinearOp(FockSpace({d}), std::move(local)));
}

LinearOp creation(const FockSpace& space, int mode) {
  return adjoint(annihilation(space, mode));
}

LinearOp number_op(const FockSpace& space, int mode) {
  if (mode < 0 || mode >= space.n_modes())
    throw std::invalid_argument("number_op: mode out of range");
  const int d = space.dim(mode);
  Matrix local = Matrix::Zero(d, d);
  for (int n = 0; n < d; ++n) local(n, n) = static_cast<double>(n);
  LinearOp out = embed(space, mode, LinearOp(FockSpace({d}), std::move(local), true));
  out.hermitian = true;
  return out;
}

LinearOp total_number_op(const FockSpace& space) {
  Matrix sum = Matrix::Zero(space.total_dim(), space.total_dim());
  for (int k = 0; k < space.n_modes(); ++k) sum += number_op(space, k).matrix;
  return LinearOp(space, std::move(sum), true);
}

LinearOp adjoint(const LinearOp& op) {
  return LinearOp(op.space, op.matrix.adjoint(), op.hermitian);
}

LinearOp embed(const FockSpace& space, int mode, const LinearOp& local) {
  if (mode < 0 || mode >= space.n_modes())
    throw std::invalid_argument("embed: mode out of range");
  if (local.matrix.rows() != space.dim(mode))
    throw std::invalid_argument("embed: local dimension does not match mode");
  const Eigen::Index total = space.total_dim();
  Matrix out = Matrix::Zero(total, total);
  const int d = space.dim(mode);
  // Column-by-column tensor embedding through the occupation bijection.
  for (Eigen::Index col = 0; col < total; ++col) {
    std::vector<int> occ = space.occupation_of(col);
    const int n_col = occ[static_cast<std::size_t>(mode)];
    for (int n_row = 0; n_row < d; ++n_row) {
      const Complex v = local.matrix(n_row, n_col);
      if (v == Complex(0.0, 0.0)) continue;
      occ[static_cast<std::size_t>(mode)] = n_row;
      out(space.index_of(occ), col) = v;
    }
    occ[static_cast<std::size_t>(mode)] = n_col;
  }
  return LinearOp(space, std::move(out), false);
}

Ket basis_ket(const FockSpace& space, const std::vector<int>& occupation) {
  Vector amps = Vector::Zero(space.total_dim());
  amps(space.index_of(occupation)) = 1.0;
  return Ket(space, std::move(amps));
}

Complex expectation(const Ket& state, const LinearOp& op) {
  if (state.space != op.space)
    throw std::invalid_argument("expectation: state and operator spaces differ");
  return state.amplitudes.dot(op.matrix * state.amplitudes);
}

Complex expectation(const DensityOp& state, const LinearOp& op) {
  if (state.space != op.space)
    throw std::invalid_argument("expectation: state and operator spaces differ");
  return (state.matrix * op.matrix).trace();
}

namespace {
double checked_real(Complex v, bool hermitian) {
  if (!hermitian)
    throw std::invalid_argument("real_expectation: operator is not flagged Hermitian");
  if (std::abs(v.imag()) > kHermitianTol)
    throw std::runtime_error("real_expectation: imaginary residue " +
                             std::to_string(v.imag()));
  return v.real();
}
}  // namespace

double real_expectation(const Ket& state, const LinearOp& op) {
  return checked_real(expectation(state, op), op.hermitian);
}

double real_expectation(const DensityOp& state, const LinearOp& op) {
  return checked_real(expectation(state, op), op.hermitian);
}

Complex project_pair(const Ket& state, std::pair<int, int> modes,
                     std::pair<int, int> pair_occupation) {
  const auto [j, k] = modes;
  const auto [nj, nk] = pair_occupation;
  if (j < 0 || j >= state.space.n_modes() || k < 0 || k >= state.space.n_modes() || j == k)
    throw std::invalid_argument("project_pair: bad mode pair");
  if (nj < 0 || nj >= state.space.dim(j) || nk < 0 || nk >= state.space.dim(k))
    throw std::invalid_argument("project_pair: pair occupation at or above truncation");
  std::vector<int> occ(static_cast<std::size_t>(state.space.n_modes()), 0);
  occ[static_cast<std::size_t>(j)] = nj;
  occ[static_cast<std::size_t>(k)] = nk;
  return state.amplitudes(state.space.index_of(occ));
}

}  // namespace chiralmag
