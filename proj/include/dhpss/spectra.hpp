#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "dhpss/bessel.hpp"
#include "dhpss/eigensystem.hpp"
#include "dhpss/kernels.hpp"
#include "dhpss/quadrature.hpp"

namespace dhpss {

/// A problem configuration bundled with the zeros it needs (s_1 .. s_{N+1}).
struct Problem {
  ProblemConfig config;
  ZeroTable zeros;

  /// quad_points <= 0 selects default_quad_points().
  static Problem make(double alpha, double omega, int n_basis, int quad_points = 0);
};

enum class Method { gram_closed_form, gram_quadrature, nystrom };

std::string_view method_name(Method m);

/// Descending eigenvalues of the discrete operator together with the
/// coefficient vectors of the truncated sequences in the Fourier-Bessel basis.
struct Spectrum {
  std::vector<double> eigenvalues;               // N values, clamped to [0, 1]
  std::vector<std::vector<double>> coefficients;  // coefficients[n][k-1] = x_{k,n}
  ProblemConfig config;
  Method method;
  double min_gap = 0.0;          // smallest gap between consecutive eigenvalues
  double rank_tail = 0.0;        // Nystrom only: max |eigenvalue| beyond index N
};

/// Eigenvalues closer than this to [0, 1] are rounding; anything further out
/// is a hard NumericalError.
inline constexpr double kClampTol = 1e-10;

/// Quadrature rule on (0, omega) with config.quad_points nodes rounded up to
/// whole kPanelPoints panels.
QuadratureRule problem_rule(const ProblemConfig& config);

/// rho_{jk} = 2 K_omega(s_j, s_k) / (sqrt(s_j s_k) |J_{a+1}(s_j)| |J_{a+1}(s_k)|)
/// with K_omega(x, y) = omega G_alpha(omega x, omega y).
Matrix gram_matrix(const ProblemConfig& config, const ZeroTable& zeros);

/// Closed-form diagonal entry rho_{jj} = int_0^omega phi_j^2.
double gram_diagonal(const ProblemConfig& config, const ZeroTable& zeros, std::size_t j);

/// int_0^omega phi_j phi_k by composite Gauss-Legendre on problem_rule().
Matrix gram_matrix_quadrature(const ProblemConfig& config, const ZeroTable& zeros);

/// A_{ij} = sqrt(w_i w_j) K_N(x_i, x_j) on the nodes of problem_rule().
Matrix nystrom_matrix(const ProblemConfig& config, const ZeroTable& zeros);

/// Solve the eigenproblem with the requested discretisation. Coefficient
/// vectors are sign-normalised so that the synthesised eigenfunction is
/// positive at the first probe point where it does not vanish.
Spectrum compute_spectrum(const ProblemConfig& config, const ZeroTable& zeros, Method method);

/// Clamp raw eigenvalues into [0, 1] after checking they are within
/// kClampTol of it.
std::vector<double> clamp_eigenvalues(std::vector<double> raw);

/// sum_k x_{k,n} phi_k(r), n is 0-based.
double synthesize_eigenfunction(const Spectrum& spectrum, const ZeroTable& zeros, std::size_t n,
                                double r);

}  // namespace dhpss
