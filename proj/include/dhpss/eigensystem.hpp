#pragma once

#include <vector>

#include <Eigen/Dense>

namespace dhpss {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

struct EigenSystem {
  std::vector<double> values;  // descending
  Matrix vectors;              // column k pairs with values[k]; orthonormal
};

/// Full spectral decomposition of a real symmetric matrix.
///
/// Sizes up to kJacobiMaxSize use cyclic Jacobi rotations; larger matrices go
/// through Householder tridiagonalisation + implicit QL (Eigen). Throws
/// NumericalError when max|A - A^T| > 1e-12 and ConvergenceError when the
/// iteration cap is hit or a pair violates ||Av - lv|| <= 1e-9 ||A||.
EigenSystem eigensystem(const Matrix& a);

inline constexpr int kJacobiMaxSize = 64;
inline constexpr double kSymmetryTol = 1e-12;
inline constexpr double kResidualTol = 1e-9;

}  // namespace dhpss
