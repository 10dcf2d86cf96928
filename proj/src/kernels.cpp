#include "dhpss/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "dhpss/errors.hpp"
#include "dhpss/quadrature.hpp"

namespace dhpss {

namespace {

constexpr double kPi = std::numbers::pi;

void check_unit_interval(const char* what, double r) {
  if (!(r >= 0.0 && r <= 1.0)) {
    std::ostringstream msg;
    msg << what << ": argument " << r << " outside [0, 1]";
    throw DomainError(msg.str());
  }
}

// sqrt(t) J_alpha(t) for t >= 0, finite at t = 0 for alpha = -1/2.
double sqrt_times_j(Order order, double t) {
  if (t == 0.0) return order.is_minus_half() ? std::sqrt(2.0 / kPi) : 0.0;
  return std::sqrt(t) * eval_j(order, t);
}

double diagonal_G(Order order, double x) {
  if (x == 0.0) return order.is_minus_half() ? 2.0 / kPi : 0.0;
  const double alpha = order.value();
  const double j = eval_j(order, x);
  const double dj = eval_j_prime(order, x);
  return 0.5 * x * (dj * dj + (1.0 - alpha * alpha / (x * x)) * j * j);
}

}  // namespace

Band::Band(double omega) : omega_(omega) {
  if (!(omega > 0.0 && omega <= 1.0)) throw DomainError("omega must be in (0, 1]");
}

ProblemConfig::ProblemConfig(Order order_, Band band_, int n_basis_, int quad_points_)
    : order(order_), band(band_), n_basis(n_basis_), quad_points(quad_points_) {
  if (n_basis < 1) throw DomainError("n must be >= 1");
  if (quad_points < 10 * n_basis) {
    throw DomainError("quad-points must be >= 10 * n (got " + std::to_string(quad_points) +
                      " for n = " + std::to_string(n_basis) + ")");
  }
}

int default_quad_points(const ZeroTable& zeros, Band band, int n_basis) {
  if (n_basis < 1) throw DomainError("n must be >= 1");
  const double s_n = zeros.zero(static_cast<std::size_t>(n_basis));
  const int by_oscillation = static_cast<int>(std::ceil(s_n * band.omega() / kPi));
  const int by_size = (10 * n_basis + kPanelPoints - 1) / kPanelPoints;
  return kPanelPoints * std::max({1, by_oscillation, by_size});
}

BandwidthC::BandwidthC(double c) : c_(c) {
  if (!(c > 0.0) || !std::isfinite(c)) throw DomainError("bandwidth c must be > 0");
}

BandwidthC BandwidthC::asymptotic(Order order, int n_basis) {
  return BandwidthC((n_basis + 0.5 * order.value() + 0.25) * kPi);
}

BandwidthC BandwidthC::from_config(const ProblemConfig& config) {
  return BandwidthC(asymptotic(config.order, config.n_basis).value() * config.band.omega());
}

double bessel_phase(Order order) { return 0.5 * order.value() * kPi + 0.25 * kPi; }

double basis_phi(const ZeroTable& zeros, std::size_t n, double r) {
  check_unit_interval("basis_phi", r);
  const double s = zeros.zero(n);
  // sqrt(2r) J(s r) = sqrt(2/s) * sqrt(s r) J(s r)
  return std::sqrt(2.0 / s) * sqrt_times_j(zeros.order(), s * r) / zeros.normalizer(n);
}

double discrete_kernel(const ProblemConfig& config, const ZeroTable& zeros, double x, double y) {
  check_unit_interval("discrete_kernel", x);
  check_unit_interval("discrete_kernel", y);
  if (zeros.size() < static_cast<std::size_t>(config.n_basis)) {
    throw IndexError("discrete_kernel: zero table shorter than n");
  }
  double sum = 0.0;
  for (int i = 1; i <= config.n_basis; ++i) {
    sum += basis_phi(zeros, i, x) * basis_phi(zeros, i, y);
  }
  return sum;
}

double continuous_G(Order order, double x, double y) {
  if (!(x >= 0.0 && y >= 0.0) || !std::isfinite(x) || !std::isfinite(y)) {
    throw DomainError("continuous_G: arguments must be finite and >= 0");
  }
  const double scale = std::max({1.0, x, y});
  if (std::abs(x - y) < kDiagonalSwitch * scale) {
    // symmetric in (x, y): the midpoint value is exact to second order
    return diagonal_G(order, 0.5 * (x + y));
  }
  if (x == 0.0 || y == 0.0) {
    if (!order.is_minus_half()) return 0.0;
    const double t = std::max(x, y);
    return (2.0 / kPi) * std::sin(t) / t;
  }
  const Order next(order.value() + 1.0);
  const double num = x * eval_j(next, x) * eval_j(order, y) - y * eval_j(next, y) * eval_j(order, x);
  return std::sqrt(x * y) * num / ((x - y) * (x + y));
}

double continuous_K(BandwidthC c, Order order, double x, double y) {
  check_unit_interval("continuous_K", x);
  check_unit_interval("continuous_K", y);
  const double cv = c.value();
  return cv * continuous_G(order, cv * x, cv * y);
}

double v_integral(double r) {
  if (!std::isfinite(r) || !(std::abs(r) < 2.0)) {
    throw DomainError("v_integral: requires |r| < 2");
  }
  if (r == 0.0) return 0.0;
  if (r < 0.0) return -v_integral(-r);

  // sinh(rt) e^{-2t} = (e^{(r-2)t} - e^{-(r+2)t}) / 2. Quadrature on [0, T0];
  // beyond T0, 1/(1 + e^{-2t}) = 1 - e^{-2t} + e^{-4t} - ... leaves sums of
  // exponentials that integrate in closed form (the next term is ~e^{-120}).
  constexpr double t0 = 20.0;
  static const QuadratureRule rule = composite_gauss_legendre(40, 20, 0.0, t0);
  const double decay = 2.0 - r;
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const double t = rule.nodes[i];
    sum += rule.weights[i] * 0.5 * (std::exp(-decay * t) - std::exp(-(r + 2.0) * t)) / (1.0 + std::exp(-2.0 * t));
  }
  double tail = 0.0;
  double sign = 1.0;
  for (int j = 0; j < 3; ++j, sign = -sign) {
    const double slow = decay + 2.0 * j;
    const double fast = r + 2.0 + 2.0 * j;
    tail += sign * (std::exp(-slow * t0) / slow - std::exp(-fast * t0) / fast);
  }
  return sum + 0.5 * tail;
}

double correction_F(BandwidthC c_n, Order order, double x, double y) {
  if (!(std::abs(x + y) < 2.0) || !(std::abs(x - y) < 2.0)) {
    throw DomainError("correction_F: requires |x + y| < 2 and |x - y| < 2");
  }
  const double c = c_n.value();
  const double gamma = bessel_phase(order);
  return (2.0 / kPi) * (std::sin((x + y) * c - 2.0 * gamma) * v_integral(x + y) +
                        std::sin((x - y) * c) * v_integral(x - y));
}

}  // namespace dhpss
