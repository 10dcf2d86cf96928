#pragma once

#include <cstddef>

#include "dhpss/bessel.hpp"

namespace dhpss {

/// Concentration radius omega in (0, 1]. omega = 1 is the degenerate case in
/// which the discrete operator is the identity on its range.
class Band {
 public:
  explicit Band(double omega);
  double omega() const noexcept { return omega_; }

 private:
  double omega_;
};

/// One discrete concentration problem: order, band, number of basis
/// functions N and the number of quadrature nodes M used by every
/// quadrature-based route (M >= 10 N).
struct ProblemConfig {
  ProblemConfig(Order order, Band band, int n_basis, int quad_points);

  Order order;
  Band band;
  int n_basis;
  int quad_points;
};

/// Oscillation rule: kPanelPoints nodes on each of max(ceil(s_N omega/pi),
/// ceil(10 N / kPanelPoints)) panels.
int default_quad_points(const ZeroTable& zeros, Band band, int n_basis);

/// Effective bandwidth c > 0.
class BandwidthC {
 public:
  explicit BandwidthC(double c);
  double value() const noexcept { return c_; }

  /// c_N = (N + alpha/2 + 1/4) pi
  static BandwidthC asymptotic(Order order, int n_basis);
  /// c = (N + alpha/2 + 1/4) pi omega
  static BandwidthC from_config(const ProblemConfig& config);

 private:
  double c_;
};

/// Bessel phase gamma_alpha = alpha pi / 2 + pi / 4.
double bessel_phase(Order order);

/// phi_n(r) = sqrt(2r) J_alpha(s_n r) / |J_{alpha+1}(s_n)| on [0, 1].
double basis_phi(const ZeroTable& zeros, std::size_t n, double r);

/// sum_{i=1}^{N} phi_i(x) phi_i(y) for x, y in [0, 1].
double discrete_kernel(const ProblemConfig& config, const ZeroTable& zeros, double x, double y);

/// Relative width of the band around x = y inside which continuous_G uses the
/// closed-form diagonal limit instead of the divided difference.
inline constexpr double kDiagonalSwitch = 1e-6;

/// G_alpha(x, y) = sqrt(xy) (x J_{a+1}(x) J_a(y) - y J_{a+1}(y) J_a(x)) / (x^2 - y^2),
/// with the diagonal limit (x/2)(J_a'(x)^2 + (1 - a^2/x^2) J_a(x)^2) near x = y.
double continuous_G(Order order, double x, double y);

/// K_c(x, y) = c G_alpha(c x, c y).
double continuous_K(BandwidthC c, Order order, double x, double y);

/// V(r) = int_0^inf sinh(r t) e^{-2t} / (1 + e^{-2t}) dt for |r| < 2.
double v_integral(double r);

/// F(x, y) = (2/pi) [sin((x+y) c_N - 2 gamma) V(x+y) + sin((x-y) c_N) V(x-y)].
double correction_F(BandwidthC c_n, Order order, double x, double y);

}  // namespace dhpss
