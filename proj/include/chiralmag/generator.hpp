#pragma once

#include <memory>

#include "chiralmag/fock.hpp"
#include "chiralmag/floquet.hpp"
#include "chiralmag/types.hpp"

namespace chiralmag {

// Time-dependent Hamiltonian exposed to the propagators. Implementations are
// reentrant: apply_combination carries no mutable state, so one generator can
// serve parallel runs.
class HamiltonianGenerator {
 public:
  virtual ~HamiltonianGenerator() = default;

  virtual const FockSpace& space() const = 0;

  // out = (w1 * H(t1) + w2 * H(t2)) * in. Single-time application is the
  // special case w2 = 0.
  virtual void apply_combination(double t1, double w1, double t2, double w2,
                                 const Vector& in, Vector& out) const = 0;

  virtual Matrix dense_at(double t) const = 0;

  virtual bool static_hamiltonian() const = 0;

  // Cheap upper bound on ||H(t)|| over all t, used to size integrator steps.
  virtual double spectral_bound() const = 0;

  void apply(double t, const Vector& in, Vector& out) const {
    apply_combination(t, 1.0, t, 0.0, in, out);
  }
};

class StaticHamiltonian final : public HamiltonianGenerator {
 public:
  StaticHamiltonian(FockSpace space, SparseMatrix h);
  explicit StaticHamiltonian(const LinearOp& op);

  const FockSpace& space() const override { return space_; }
  void apply_combination(double t1, double w1, double t2, double w2,
                         const Vector& in, Vector& out) const override;
  Matrix dense_at(double t) const override;
  bool static_hamiltonian() const override { return true; }
  double spectral_bound() const override { return bound_; }

 private:
  FockSpace space_;
  SparseMatrix h_;
  double bound_ = 0.0;
};

// Floquet-driven hopping: constant all-to-all hopping plus per-mode cosine
// modulated number operators, kept in factored form so stepping never
// rebuilds matrices.
class FloquetDriveGenerator final : public HamiltonianGenerator {
 public:
  FloquetDriveGenerator(FockSpace space, DriveParams drive, double g);

  const FockSpace& space() const override { return space_; }
  void apply_combination(double t1, double w1, double t2, double w2,
                         const Vector& in, Vector& out) const override;
  Matrix dense_at(double t) const override;
  bool static_hamiltonian() const override { return drive_.delta_amp == 0.0; }
  double spectral_bound() const override { return bound_; }

  const DriveParams& drive() const { return drive_; }
  double drive_period() const { return 2.0 * kPi / drive_.omega_drive; }

 private:
  double modulation(int mode, double t) const;

  FockSpace space_;
  DriveParams drive_;
  double g_;
  SparseMatrix hopping_;
  std::vector<RealVector> number_diag_;
  double bound_ = 0.0;
};

// Generic fallback wrapping a t -> LinearOp callback; materializes matrices,
// so intended for tests and small spaces.
class CallbackGenerator final : public HamiltonianGenerator {
 public:
  using Builder = std::function<LinearOp(double)>;
  CallbackGenerator(FockSpace space, Builder builder, bool is_static,
                    double bound);

  const FockSpace& space() const override { return space_; }
  void apply_combination(double t1, double w1, double t2, double w2,
                         const Vector& in, Vector& out) const override;
  Matrix dense_at(double t) const override { return builder_(t).matrix; }
  bool static_hamiltonian() const override { return static_; }
  double spectral_bound() const override { return bound_; }

 private:
  FockSpace space_;
  Builder builder_;
  bool static_ = false;
  double bound_ = 0.0;
};

double sparse_abs_row_bound(const SparseMatrix& m);

}  // namespace chiralmag
