#pragma once

#include <vector>

namespace dhpss {

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  double a = 0.0;
  double b = 0.0;

  std::size_t size() const noexcept { return nodes.size(); }

  template <class F>
  double integrate(F&& f) const {
    double sum = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) sum += weights[i] * f(nodes[i]);
    return sum;
  }
};

/// Gauss-Legendre rule with `points` nodes mapped to (a, b). Nodes come from
/// Newton iteration on the three-term Legendre recurrence.
QuadratureRule gauss_legendre(int points, double a, double b);

/// `panels` equal sub-intervals of (a, b), each carrying a Gauss-Legendre
/// rule of `points_per_panel` nodes.
QuadratureRule composite_gauss_legendre(int panels, int points_per_panel, double a, double b);

/// Nodes per panel used by every oscillation-resolved rule in the library.
inline constexpr int kPanelPoints = 16;

}  // namespace dhpss
