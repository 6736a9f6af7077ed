#pragma once

#include <vector>

#include "chiralmag/types.hpp"

namespace chiralmag {

// Bessel function of the first kind, integer order n >= 0, |x| <= 50.
// Power series for small arguments, Miller backward recurrence otherwise;
// accurate to ~1e-13 over the supported range.
double bessel_j(int n, double x);

// Smallest positive zero of J0, by bisection on [2, 3].
double chiral_root();

// Periodic frequency modulation: intensity, frequency and one local phase
// per magnon mode (all rates in units of the static hopping g).
struct DriveParams {
  double delta_amp = 0.0;
  double omega_drive = 1.0;
  std::vector<double> phases;
};

// Drive parameters resolved for one mode pair (k, j).
struct PairParams {
  double f_kj = 0.0;      // (2*Delta/omega) * sin((phi_j - phi_k)/2)
  double alpha_kj = 0.0;  // atan2(sin phi_k - sin phi_j, cos phi_k - cos phi_j), in [0, 2pi)
  double beta_kj = 0.0;   // (Delta/omega) * (sin phi_k - sin phi_j)
  double g_kj_phase = 0.0;  // phase of the dressed hopping, -beta_kj
};

PairParams pair_params(const DriveParams& drive, int k, int j);

// Second-order chiral coupling g_eff(f) = (2 g^2 / omega) * sum_n J_n(f)^2/n * sin(n pi/3).
double g_eff_series(double f, double g, double omega);

enum class Chirality { kNone, kClockwise, kAnticlockwise };

// All quantities derived from a drive on the three-magnon loop, including the
// 3x3 one-body coefficient matrix of the stroboscopic Hamiltonian.
struct EffectiveModel {
  double g = 1.0;
  double f = 0.0;        // common Bessel argument
  double g_eff = 0.0;
  Complex G{1.0, 0.0};   // g*J0(f) + i*g_eff (clockwise set), conjugate for anticlockwise
  double phi = 0.0;      // arg G
  double Phi = 0.0;      // closed-loop phase, in (-pi, pi]
  double phi_12 = 0.0, phi_23 = 0.0, phi_31 = 0.0;  // hopping phases, sum = Phi mod 2pi
  Chirality chirality = Chirality::kNone;
  Matrix3 kernel = Matrix3::Zero();  // H = sum_pq kernel(p,q) m_p^dag m_q
  std::vector<PairParams> pairs;     // (1,2), (1,3), (2,3) in mode order
};

// Builds the effective model for a three-mode drive. Supports the two uniform
// phase triads (up to a global phase shift) and general triples; refuses N != 3.
EffectiveModel effective_model(const DriveParams& drive, double g);

// Effective model of the compact single-parameter form: |G| = 1 and loop
// phase Phi split evenly over the three hops.
EffectiveModel model_from_loop_phase(double Phi);

Matrix3 coefficient_matrix(const EffectiveModel& model);

struct CorrectionMagnitudes {
  double second_order = 0.0;
  double third_order_bound = 0.0;
};

// |g_eff| together with a bound on the third-order correction,
// (g^3/omega^2) * sum_{l=m+n, n+m<=20} |J_n J_m J_l| / (n+m).
CorrectionMagnitudes correction_magnitudes(const DriveParams& drive, double g);

double wrap_angle(double angle);             // to (-pi, pi]
double wrap_angle_positive(double angle);    // to [0, 2pi)

}  // namespace chiralmag
