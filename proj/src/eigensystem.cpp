#include "dhpss/eigensystem.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "dhpss/errors.hpp"

namespace dhpss {

namespace {

constexpr int kMaxSweeps = 100;

// Cyclic Jacobi: annihilate every off-diagonal entry in turn until the
// off-diagonal Frobenius norm is negligible against the full norm.
void jacobi(Matrix a, Vector& values, Matrix& vectors) {
  const Eigen::Index n = a.rows();
  vectors = Matrix::Identity(n, n);
  const double total = a.norm();

  int sweep = 0;
  for (; sweep < kMaxSweeps; ++sweep) {
    double off = 0.0;
    for (Eigen::Index q = 1; q < n; ++q)
      for (Eigen::Index p = 0; p < q; ++p) off += a(p, q) * a(p, q);
    if (std::sqrt(2.0 * off) <= 1e-15 * total || off == 0.0) break;

    for (Eigen::Index p = 0; p + 1 < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::hypot(theta, 1.0));
        const double c = 1.0 / std::hypot(t, 1.0);
        const double s = t * c;

        for (Eigen::Index k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const double vkp = vectors(k, p);
          const double vkq = vectors(k, q);
          vectors(k, p) = c * vkp - s * vkq;
          vectors(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }
  if (sweep == kMaxSweeps) throw ConvergenceError("eigensystem: Jacobi sweep cap reached");
  values = a.diagonal();
}

}  // namespace

EigenSystem eigensystem(const Matrix& a) {
  if (a.rows() != a.cols()) throw DomainError("eigensystem: matrix must be square");
  const Eigen::Index n = a.rows();
  if (n == 0) return {};
  if (!a.allFinite()) throw NumericalError("eigensystem: non-finite entry");
  const double asym = (a - a.transpose()).cwiseAbs().maxCoeff();
  if (asym > kSymmetryTol) {
    std::ostringstream msg;
    msg << "eigensystem: matrix not symmetric (max |A - A^T| = " << asym << ")";
    throw NumericalError(msg.str());
  }

  Vector values;
  Matrix vectors;
  if (n <= kJacobiMaxSize) {
    jacobi(a, values, vectors);
  } else {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(a);
    if (solver.info() != Eigen::Success) throw ConvergenceError("eigensystem: QL iteration failed");
    values = solver.eigenvalues();
    vectors = solver.eigenvectors();
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index i, Eigen::Index j) { return values(i) > values(j); });

  EigenSystem out;
  out.values.reserve(order.size());
  out.vectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    out.values.push_back(values(order[k]));
    out.vectors.col(k) = vectors.col(order[k]);
  }

  const double scale = std::max(a.norm(), 1e-300);
  const Matrix residual = a * out.vectors - out.vectors * Vector::Map(out.values.data(), n).asDiagonal();
  for (Eigen::Index k = 0; k < n; ++k) {
    if (residual.col(k).norm() > kResidualTol * scale) {
      throw ConvergenceError("eigensystem: residual contract violated for pair " + std::to_string(k));
    }
  }
  return out;
}

}  // namespace dhpss
