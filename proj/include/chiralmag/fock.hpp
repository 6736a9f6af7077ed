#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "chiralmag/types.hpp"

namespace chiralmag {

// Truncated multimode bosonic Fock space. Basis ordering is row-major with
// mode 0 slowest; the index <-> occupation bijection is fixed so that matrix
// layouts and file dumps are reproducible.
class FockSpace {
 public:
  explicit FockSpace(std::vector<int> mode_dims);

  int n_modes() const { return static_cast<int>(dims_.size()); }
  int dim(int mode) const { return dims_.at(static_cast<std::size_t>(mode)); }
  const std::vector<int>& mode_dims() const { return dims_; }
  Eigen::Index total_dim() const { return total_; }

  Eigen::Index index_of(const std::vector<int>& occupation) const;
  std::vector<int> occupation_of(Eigen::Index index) const;

  bool operator==(const FockSpace& other) const { return dims_ == other.dims_; }
  bool operator!=(const FockSpace& other) const { return !(*this == other); }

 private:
  std::vector<int> dims_;
  std::vector<Eigen::Index> strides_;
  Eigen::Index total_ = 0;
};

// Complex operator on a FockSpace. The `hermitian` flag is a promise checked
// at construction time against the matrix.
struct LinearOp {
  LinearOp(FockSpace space, Matrix matrix, bool hermitian = false);

  FockSpace space;
  Matrix matrix;
  bool hermitian = false;
};

// Pure state; normalized to 1e-9 at construction.
struct Ket {
  Ket(FockSpace space, Vector amplitudes);

  FockSpace space;
  Vector amplitudes;
};

// Mixed state; Hermitian to 1e-10 and unit trace to 1e-8 at construction.
// Positivity is checked by validate_positive() (eigenvalue sweep), which is
// left to callers since it is O(dim^3).
struct DensityOp {
  DensityOp(FockSpace space, Matrix matrix);

  void validate_positive(double tol = 1e-8) const;

  FockSpace space;
  Matrix matrix;
};

LinearOp identity_op(const FockSpace& space);
LinearOp annihilation(const FockSpace& space, int mode);
LinearOp creation(const FockSpace& space, int mode);
LinearOp number_op(const FockSpace& space, int mode);
LinearOp total_number_op(const FockSpace& space);
LinearOp adjoint(const LinearOp& op);

// identity x ... x local x ... x identity under the fixed basis ordering.
LinearOp embed(const FockSpace& space, int mode, const LinearOp& local);

// Basis ket |n_0, n_1, ...>.
Ket basis_ket(const FockSpace& space, const std::vector<int>& occupation);

Complex expectation(const Ket& state, const LinearOp& op);
Complex expectation(const DensityOp& state, const LinearOp& op);

// Expectation of an operator flagged Hermitian; the imaginary part must
// vanish to 1e-10.
double real_expectation(const Ket& state, const LinearOp& op);
double real_expectation(const DensityOp& state, const LinearOp& op);

// Amplitude of the component with modes (j, k) in |n_j, n_k> and every other
// mode in vacuum.
Complex project_pair(const Ket& state, std::pair<int, int> modes,
                     std::pair<int, int> pair_occupation);

double hermiticity_error(const Matrix& m);

}  // namespace chiralmag
