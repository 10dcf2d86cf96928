#include "dhpss/bessel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include <boost/math/special_functions/bessel.hpp>

#include "dhpss/errors.hpp"

namespace dhpss {

namespace {

constexpr double kPi = std::numbers::pi;

// Half-width of the bracket placed around the McMahon estimate.
constexpr double kBracketHalfWidth = 0.3;
// Step of the sign-change scan; consecutive zeros are always > 2 apart.
constexpr double kScanStep = 0.25;

double mcmahon_guess(double alpha, std::size_t n) {
  const double beta = (static_cast<double>(n) + 0.5 * alpha - 0.25) * kPi;
  const double mu = 4.0 * alpha * alpha;
  return beta - (mu - 1.0) / (8.0 * beta);
}

bool opposite_signs(double a, double b) { return (a < 0.0) != (b < 0.0); }

// The double-precision value of J near a zero carries an absolute error of a
// few ulps, which alone moves the root by ~1e-15. Two extended-precision
// Newton steps bring it back to the correctly rounded neighbourhood.
double refine_extended(double alpha, double x) {
  const long double a = alpha;
  long double t = x;
  for (int i = 0; i < 2; ++i) {
    const long double f = boost::math::cyl_bessel_j(a, t);
    const long double df = a / t * f - boost::math::cyl_bessel_j(a + 1.0L, t);
    if (df == 0.0L) break;
    t -= f / df;
  }
  const double out = static_cast<double>(t);
  return std::abs(out - x) < 1e-8 * x ? out : x;
}

// Returns true when J changes sign somewhere on [from, to] (sampled).
bool sign_change_between(Order order, double from, double to) {
  double x = from;
  double fx = eval_j(order, x);
  while (x < to) {
    const double next = std::min(x + kScanStep, to);
    const double fn = eval_j(order, next);
    if (opposite_signs(fx, fn)) return true;
    x = next;
    fx = fn;
  }
  return false;
}

struct Bracket {
  double lo;
  double hi;
};

Bracket scan_for_bracket(Order order, double start, std::size_t n) {
  const double limit = start + 4.0 * kPi;
  double x = start;
  double fx = eval_j(order, x);
  while (x < limit) {
    const double next = x + kScanStep;
    const double fn = eval_j(order, next);
    if (opposite_signs(fx, fn)) return {x, next};
    x = next;
    fx = fn;
  }
  std::ostringstream msg;
  msg << "find_zeros: no sign change found for zero " << n << " of J_"
      << order.value() << " in [" << start << ", " << limit << "]";
  throw ConvergenceError(msg.str());
}

double polish(Order order, Bracket br, double guess, std::size_t n) {
  double lo = br.lo;
  double hi = br.hi;
  double flo = eval_j(order, lo);
  double x = (guess > lo && guess < hi) ? guess : 0.5 * (lo + hi);

  for (int iter = 0; iter < 100; ++iter) {
    const double fx = eval_j(order, x);
    if (fx == 0.0) return x;
    if (opposite_signs(flo, fx)) {
      hi = x;
    } else {
      lo = x;
      flo = fx;
    }
    const double dfx = eval_j_prime(order, x);
    double next = x - fx / dfx;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    const double step = std::abs(next - x);
    x = next;
    if (step <= 4.0 * std::numeric_limits<double>::epsilon() * x) break;
  }
  x = refine_extended(order.value(), x);

  const double residual = std::abs(eval_j(order, x));
  if (!(residual < kZeroResidualTol)) {
    std::ostringstream msg;
    msg << "find_zeros: zero " << n << " of J_" << order.value()
        << " did not converge (residual " << residual << ")";
    throw ConvergenceError(msg.str());
  }
  return x;
}

}  // namespace

Order::Order(double alpha) : alpha_(alpha) {
  if (!std::isfinite(alpha) || alpha < -0.5) {
    throw DomainError("alpha must be >= -0.5");
  }
}

ZeroTable::ZeroTable(Order order, std::vector<double> zeros)
    : order_(order), zeros_(std::move(zeros)), zeta_(std::numeric_limits<double>::infinity()) {
  if (zeros_.empty()) throw DomainError("ZeroTable: at least one zero is required");
  normalizers_.reserve(zeros_.size());
  const Order next(order.value() + 1.0);
  for (std::size_t i = 0; i < zeros_.size(); ++i) {
    if (!(zeros_[i] > 0.0) || (i > 0 && !(zeros_[i] > zeros_[i - 1]))) {
      throw NumericalError("ZeroTable: zeros must be positive and strictly increasing");
    }
    normalizers_.push_back(std::abs(eval_j(next, zeros_[i])));
  }
  zeta_ = zeta_upto(zeros_.size());
}

double ZeroTable::zero(std::size_t n) const {
  if (n < 1 || n > zeros_.size()) {
    throw IndexError("ZeroTable: index " + std::to_string(n) + " outside [1, " +
                     std::to_string(zeros_.size()) + "]");
  }
  return zeros_[n - 1];
}

double ZeroTable::normalizer(std::size_t n) const {
  if (n < 1 || n > normalizers_.size()) {
    throw IndexError("ZeroTable: index " + std::to_string(n) + " outside [1, " +
                     std::to_string(normalizers_.size()) + "]");
  }
  return normalizers_[n - 1];
}

double ZeroTable::zeta_upto(std::size_t count) const {
  if (count > zeros_.size()) {
    throw IndexError("ZeroTable: zeta requested over " + std::to_string(count) +
                     " zeros, table holds " + std::to_string(zeros_.size()));
  }
  double min_gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < count; ++i) min_gap = std::min(min_gap, zeros_[i] - zeros_[i - 1]);
  return 0.5 * min_gap;
}

double eval_j(Order order, double x) {
  if (!std::isfinite(x)) throw DomainError("eval_j: x must be finite");
  if (x < 0.0) throw DomainError("eval_j: x must be >= 0");
  const double alpha = order.value();
  if (x == 0.0) {
    if (alpha == 0.0) return 1.0;
    return alpha > 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  }
  return boost::math::cyl_bessel_j(alpha, x);
}

double eval_j_prime(Order order, double x) {
  if (!std::isfinite(x)) throw DomainError("eval_j_prime: x must be finite");
  if (!(x > 0.0)) throw DomainError("eval_j_prime: x must be > 0");
  const double alpha = order.value();
  const double j_next = boost::math::cyl_bessel_j(alpha + 1.0, x);
  if (alpha - 1.0 < -0.5) {
    return -j_next + (alpha / x) * boost::math::cyl_bessel_j(alpha, x);
  }
  return 0.5 * (boost::math::cyl_bessel_j(alpha - 1.0, x) - j_next);
}

ZeroTable find_zeros(Order order, std::size_t count) {
  if (count < 1) throw DomainError("find_zeros: count must be >= 1");
  const double alpha = order.value();
  std::vector<double> zeros;
  zeros.reserve(count);

  for (std::size_t n = 1; n <= count; ++n) {
    // J_alpha > 0 on (0, s_1) for every admitted order.
    const double prev = zeros.empty() ? 0.0 : zeros.back();
    const double scan_start = zeros.empty() ? 1e-3 : prev + 0.05;
    const double guess = mcmahon_guess(alpha, n);

    Bracket br{guess - kBracketHalfWidth, guess + kBracketHalfWidth};
    const bool usable = br.lo > scan_start &&
                        opposite_signs(eval_j(order, br.lo), eval_j(order, br.hi)) &&
                        !sign_change_between(order, scan_start, br.lo);
    if (!usable) br = scan_for_bracket(order, scan_start, n);

    zeros.push_back(polish(order, br, guess, n));
  }
  return ZeroTable(order, std::move(zeros));
}

}  // namespace dhpss
