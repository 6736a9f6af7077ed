#pragma once

#include <complex>
#include <Eigen/Dense>
#include <Eigen/SparseCore>

namespace chiralmag {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;
using Matrix3 = Eigen::Matrix3cd;
using RealVector = Eigen::VectorXd;
using SparseMatrix = Eigen::SparseMatrix<Complex>;

inline constexpr Complex kI{0.0, 1.0};
inline constexpr double kPi = 3.14159265358979323846;

// Numerical contract tolerances used across modules.
inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kNormTol = 1e-9;
inline constexpr double kTraceTol = 1e-8;
inline constexpr double kStateTailBound = 1e-10;

}  // namespace chiralmag
