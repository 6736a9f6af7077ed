#pragma once

#include <memory>
#include <vector>

#include "chiralmag/fock.hpp"
#include "chiralmag/floquet.hpp"
#include "chiralmag/generator.hpp"
#include "chiralmag/types.hpp"

namespace chiralmag {

// Cavity-magnon model parameters; rates in units of g_am unless the caller
// chooses otherwise (only ratios enter the physics).
struct CavityModelParams {
  double omega_a = 0.0;
  double omega_m = 0.0;
  double g_am = 1.0;
  int n_magnons = 2;
};

struct ErrorParams {
  double delta = 0.0;   // relative photon-magnon coupling asymmetry, |delta| < 1
  double kerr_k = 0.0;  // Kerr coefficient, units of g
};

// Full cavity + N magnon Hamiltonian (rotating-wave form). The photon is
// mode 0 of the space. Per-magnon coupling scale factors implement the
// location-dependent asymmetry model; empty means uniform coupling.
LinearOp full_cavity_magnon(const CavityModelParams& params, const FockSpace& space,
                            const std::vector<double>& coupling_scales = {});

// Same model with counter-rotating photon-magnon terms kept. Conserves the
// excitation-number parity instead of the excitation number.
LinearOp full_with_counter_rotating(const CavityModelParams& params,
                                    const FockSpace& space);

// Parity operator (-1)^(total occupation).
LinearOp parity_op(const FockSpace& space);

// Photon-eliminated all-to-all hopping, g * sum_{k<j} (m_k m_j^dag + h.c.).
LinearOp effective_static(double g, const FockSpace& space);

// H(t) of the driven loop at one instant; the cached-generator form below is
// what propagators consume.
LinearOp floquet_drive_hamiltonian(const DriveParams& drive, double g,
                                   const FockSpace& space, double t);

std::shared_ptr<FloquetDriveGenerator> make_floquet_generator(
    const DriveParams& drive, double g, const FockSpace& space);

// Quadratic form sum_pq kernel(p, q) m_p^dag m_q on a three-mode space.
LinearOp quadratic_form(const Matrix3& kernel, const FockSpace& space);
SparseMatrix quadratic_form_sparse(const Matrix3& kernel, const FockSpace& space);

// Effective chiral Hamiltonian from a drive-derived model.
LinearOp chiral_effective(const EffectiveModel& model, const FockSpace& space);

// Coupling-asymmetry variant of the chiral Hamiltonian.
LinearOp error_effective(const EffectiveModel& model, double delta,
                         const FockSpace& space);
Matrix3 error_kernel(const EffectiveModel& model, double delta);

// Static hopping plus Kerr nonlinearity K * sum_k (n_k)^2.
LinearOp kerr_hamiltonian(double g, double kerr_k, const FockSpace& space);

}  // namespace chiralmag
