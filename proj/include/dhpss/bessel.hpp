#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace dhpss {

/// Order of a Bessel function of the first kind. Only alpha >= -1/2 is
/// admitted; the constructor throws DomainError otherwise.
class Order {
 public:
  explicit Order(double alpha);

  double value() const noexcept { return alpha_; }
  bool is_minus_half() const noexcept { return alpha_ == -0.5; }

 private:
  double alpha_;
};

/// Ascending positive zeros s_1 < s_2 < ... of J_alpha together with the
/// normalizers |J_{alpha+1}(s_n)| used by the Fourier-Bessel basis.
///
/// Indices are 1-based to match s_n; zeta() is half the minimum gap between
/// consecutive stored zeros (infinity when only one zero is stored).
class ZeroTable {
 public:
  ZeroTable(Order order, std::vector<double> zeros);

  Order order() const noexcept { return order_; }
  std::size_t size() const noexcept { return zeros_.size(); }
  std::span<const double> zeros() const noexcept { return zeros_; }

  double zero(std::size_t n) const;        // s_n, n in [1, size()]
  double normalizer(std::size_t n) const;  // |J_{alpha+1}(s_n)|
  double zeta() const noexcept { return zeta_; }

  // Half the minimum gap over s_1..s_{count}; requires count <= size().
  double zeta_upto(std::size_t count) const;

 private:
  Order order_;
  std::vector<double> zeros_;
  std::vector<double> normalizers_;
  double zeta_;
};

/// J_alpha(x) for x >= 0. For alpha < 0 the value at x = 0 is +infinity.
double eval_j(Order order, double x);

/// J_alpha'(x) for x > 0.
double eval_j_prime(Order order, double x);

/// First `count` positive zeros of J_alpha, Newton-polished from the McMahon
/// estimate inside a sign-change bracket; residual |J_alpha(s_n)| < 1e-10.
ZeroTable find_zeros(Order order, std::size_t count);

/// Absolute residual tolerance for stored zeros.
inline constexpr double kZeroResidualTol = 1e-10;

}  // namespace dhpss
