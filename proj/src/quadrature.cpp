#include "dhpss/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "dhpss/errors.hpp"

namespace dhpss {

namespace {

// P_n(x) and P_n'(x) via the three-term recurrence.
void legendre(int n, double x, double& p, double& dp) {
  double p0 = 1.0;
  double p1 = x;
  for (int k = 2; k <= n; ++k) {
    const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  p = p1;
  dp = n * (x * p1 - p0) / (x * x - 1.0);
}

}  // namespace

QuadratureRule gauss_legendre(int points, double a, double b) {
  if (points < 2) throw DomainError("gauss_legendre: points must be >= 2");
  if (!(a < b)) throw DomainError("gauss_legendre: requires a < b");

  QuadratureRule rule;
  rule.a = a;
  rule.b = b;
  rule.nodes.resize(points);
  rule.weights.resize(points);

  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  const int m = (points + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (points + 0.5));
    double p = 0.0;
    double dp = 1.0;
    for (int iter = 0; iter < 100; ++iter) {
      legendre(points, x, p, dp);
      const double dx = p / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    legendre(points, x, p, dp);
    if (std::abs(p) > 1e-14) {
      throw ConvergenceError("gauss_legendre: node residual " + std::to_string(p));
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    // ascending order: node i is the mirror of node points-1-i
    rule.nodes[i] = mid - half * x;
    rule.nodes[points - 1 - i] = mid + half * x;
    rule.weights[i] = half * w;
    rule.weights[points - 1 - i] = half * w;
  }
  if (points % 2 == 1) rule.nodes[points / 2] = mid;
  return rule;
}

QuadratureRule composite_gauss_legendre(int panels, int points_per_panel, double a, double b) {
  if (panels < 1) throw DomainError("composite_gauss_legendre: panels must be >= 1");
  if (!(a < b)) throw DomainError("composite_gauss_legendre: requires a < b");

  QuadratureRule rule;
  rule.a = a;
  rule.b = b;
  rule.nodes.reserve(static_cast<std::size_t>(panels) * points_per_panel);
  rule.weights.reserve(rule.nodes.capacity());
  const QuadratureRule ref = gauss_legendre(points_per_panel, -1.0, 1.0);
  const double width = (b - a) / panels;
  for (int p = 0; p < panels; ++p) {
    const double lo = a + p * width;
    const double hi = (p + 1 == panels) ? b : lo + width;
    const double half = 0.5 * (hi - lo);
    for (std::size_t i = 0; i < ref.size(); ++i) {
      rule.nodes.push_back(lo + half * (ref.nodes[i] + 1.0));
      rule.weights.push_back(half * ref.weights[i]);
    }
  }
  return rule;
}

}  // namespace dhpss
