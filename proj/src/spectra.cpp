#include "dhpss/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "dhpss/errors.hpp"

namespace dhpss {

namespace {

constexpr int kProbePoints = 64;

void require_zeros(const ProblemConfig& config, const ZeroTable& zeros) {
  if (zeros.size() < static_cast<std::size_t>(config.n_basis)) {
    throw IndexError("zero table holds " + std::to_string(zeros.size()) + " zeros, n = " +
                     std::to_string(config.n_basis));
  }
  if (zeros.order().value() != config.order.value()) {
    throw DomainError("zero table order does not match the problem order");
  }
}

// Phi(i, k) = sqrt(w_i) phi_{k+1}(x_i)
Matrix weighted_basis(const ProblemConfig& config, const ZeroTable& zeros, const QuadratureRule& rule) {
  const auto m = static_cast<Eigen::Index>(rule.size());
  Matrix phi(m, config.n_basis);
  for (Eigen::Index i = 0; i < m; ++i) {
    const double sw = std::sqrt(rule.weights[i]);
    for (int k = 0; k < config.n_basis; ++k) phi(i, k) = sw * basis_phi(zeros, k + 1, rule.nodes[i]);
  }
  return phi;
}

Matrix symmetrised(const Matrix& m) {
  const Matrix upper = m.triangularView<Eigen::Upper>();
  Matrix out = upper + upper.transpose();
  out.diagonal() *= 0.5;
  return out;
}

void normalise_sign(std::vector<double>& coeffs, const ZeroTable& zeros) {
  double scale = 0.0;
  std::vector<double> probe(kProbePoints);
  for (int p = 0; p < kProbePoints; ++p) {
    const double r = (p + 1.0) / kProbePoints;
    double v = 0.0;
    for (std::size_t k = 0; k < coeffs.size(); ++k) v += coeffs[k] * basis_phi(zeros, k + 1, r);
    probe[p] = v;
    scale = std::max(scale, std::abs(v));
  }
  for (double v : probe) {
    if (std::abs(v) > 1e-12 * scale) {
      if (v < 0.0) {
        for (double& c : coeffs) c = -c;
      }
      return;
    }
  }
}

double smallest_gap(const std::vector<double>& values) {
  double gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < values.size(); ++i) gap = std::min(gap, values[i - 1] - values[i]);
  return gap;
}

}  // namespace

Problem Problem::make(double alpha, double omega, int n_basis, int quad_points) {
  const Order order(alpha);
  const Band band(omega);
  if (n_basis < 1) throw DomainError("n must be >= 1");
  ZeroTable zeros = find_zeros(order, static_cast<std::size_t>(n_basis) + 1);
  const int m = quad_points > 0 ? quad_points : default_quad_points(zeros, band, n_basis);
  return Problem{ProblemConfig(order, band, n_basis, m), std::move(zeros)};
}

std::string_view method_name(Method m) {
  switch (m) {
    case Method::gram_closed_form: return "gram_closed_form";
    case Method::gram_quadrature: return "gram_quadrature";
    case Method::nystrom: return "nystrom";
  }
  return "unknown";
}

QuadratureRule problem_rule(const ProblemConfig& config) {
  const int panels = (config.quad_points + kPanelPoints - 1) / kPanelPoints;
  return composite_gauss_legendre(panels, kPanelPoints, 0.0, config.band.omega());
}

double gram_diagonal(const ProblemConfig& config, const ZeroTable& zeros, std::size_t j) {
  const double omega = config.band.omega();
  const double s = zeros.zero(j);
  const double norm = zeros.normalizer(j);
  return 2.0 * omega * continuous_G(config.order, omega * s, omega * s) / (s * norm * norm);
}

Matrix gram_matrix(const ProblemConfig& config, const ZeroTable& zeros) {
  require_zeros(config, zeros);
  const int n = config.n_basis;
  const double omega = config.band.omega();
  Matrix rho(n, n);
  for (int j = 0; j < n; ++j) {
    const double sj = zeros.zero(j + 1);
    const double dj = std::sqrt(sj) * zeros.normalizer(j + 1);
    for (int k = j; k < n; ++k) {
      const double sk = zeros.zero(k + 1);
      const double dk = std::sqrt(sk) * zeros.normalizer(k + 1);
      const double kernel = omega * continuous_G(config.order, omega * sj, omega * sk);
      rho(j, k) = 2.0 * kernel / (dj * dk);
      rho(k, j) = rho(j, k);
    }
  }
  return rho;
}

Matrix gram_matrix_quadrature(const ProblemConfig& config, const ZeroTable& zeros) {
  require_zeros(config, zeros);
  const Matrix phi = weighted_basis(config, zeros, problem_rule(config));
  return symmetrised(phi.transpose() * phi);
}

Matrix nystrom_matrix(const ProblemConfig& config, const ZeroTable& zeros) {
  require_zeros(config, zeros);
  const Matrix phi = weighted_basis(config, zeros, problem_rule(config));
  return symmetrised(phi * phi.transpose());
}

std::vector<double> clamp_eigenvalues(std::vector<double> raw) {
  for (double& v : raw) {
    if (v < -kClampTol || v > 1.0 + kClampTol) {
      std::ostringstream msg;
      msg << "eigenvalue " << v << " outside [0, 1] beyond rounding tolerance";
      throw NumericalError(msg.str());
    }
    v = std::clamp(v, 0.0, 1.0);
  }
  return raw;
}

Spectrum compute_spectrum(const ProblemConfig& config, const ZeroTable& zeros, Method method) {
  require_zeros(config, zeros);
  const int n = config.n_basis;
  Spectrum out{{}, {}, config, method};

  if (method == Method::nystrom) {
    const QuadratureRule rule = problem_rule(config);
    const Matrix phi = weighted_basis(config, zeros, rule);
    const EigenSystem es = eigensystem(symmetrised(phi * phi.transpose()));

    std::vector<double> raw(es.values.begin(), es.values.begin() + n);
    for (std::size_t i = static_cast<std::size_t>(n); i < es.values.size(); ++i) {
      out.rank_tail = std::max(out.rank_tail, std::abs(es.values[i]));
    }
    out.eigenvalues = clamp_eigenvalues(raw);

    // Coefficients of an eigenfunction are proportional to Phi^T u; the
    // directions are re-orthonormalised in descending eigenvalue order since
    // the projection of noise-level eigenvectors is not orthogonal.
    Matrix coeffs = phi.transpose() * es.vectors.leftCols(n);
    for (int col = 0; col < n; ++col) {
      for (int pass = 0; pass < 2; ++pass) {
        for (int prev = 0; prev < col; ++prev) {
          coeffs.col(col) -= coeffs.col(prev).dot(coeffs.col(col)) * coeffs.col(prev);
        }
      }
      double norm = coeffs.col(col).norm();
      if (!(norm > 1e-150)) {
        // fully degenerate direction: fall back to the first unit vector not yet spanned
        for (int e = 0; e < n && !(norm > 0.5); ++e) {
          coeffs.col(col) = Vector::Unit(n, e);
          for (int pass = 0; pass < 2; ++pass)
            for (int prev = 0; prev < col; ++prev)
              coeffs.col(col) -= coeffs.col(prev).dot(coeffs.col(col)) * coeffs.col(prev);
          norm = coeffs.col(col).norm();
        }
      }
      coeffs.col(col) /= norm;
    }
    out.coefficients.resize(n);
    for (int col = 0; col < n; ++col) {
      out.coefficients[col].assign(coeffs.col(col).data(), coeffs.col(col).data() + n);
    }
  } else {
    const Matrix rho = method == Method::gram_closed_form ? gram_matrix(config, zeros)
                                                           : gram_matrix_quadrature(config, zeros);
    const EigenSystem es = eigensystem(rho);
    out.eigenvalues = clamp_eigenvalues(es.values);
    out.coefficients.resize(n);
    for (int col = 0; col < n; ++col) {
      out.coefficients[col].assign(es.vectors.col(col).data(), es.vectors.col(col).data() + n);
    }
  }

  for (auto& c : out.coefficients) normalise_sign(c, zeros);
  out.min_gap = smallest_gap(out.eigenvalues);
  return out;
}

double synthesize_eigenfunction(const Spectrum& spectrum, const ZeroTable& zeros, std::size_t n,
                                double r) {
  if (n >= spectrum.coefficients.size()) {
    throw IndexError("synthesize_eigenfunction: index " + std::to_string(n) + " >= N = " +
                     std::to_string(spectrum.coefficients.size()));
  }
  const auto& c = spectrum.coefficients[n];
  double v = 0.0;
  for (std::size_t k = 0; k < c.size(); ++k) v += c[k] * basis_phi(zeros, k + 1, r);
  return v;
}

}  // namespace dhpss
