#pragma once

#include <vector>

#include "dhpss/eigensystem.hpp"

namespace dhpss {

/// Ingham setting for integer frequencies n_1 < ... < n_N over a window of
/// half-length T > 1.
class InghamConfig {
 public:
  InghamConfig(double t, std::vector<long> frequencies);

  /// Frequencies 1..count.
  static InghamConfig consecutive(double t, long count);

  double T() const { return t_; }
  const std::vector<long>& frequencies() const { return freqs_; }
  long n_of_T() const;    // floor(T) + 1
  double omega() const;   // T / (2 N(T))
  std::vector<long> scaled_indices() const;  // N(T) n_k

 private:
  double t_;
  std::vector<long> freqs_;
};

/// sin(2 pi (n_i - n_j) w) / (pi (n_i - n_j)), 2w on the diagonal; 0 < w < 1/2.
Matrix sinc_gram(const std::vector<long>& indices, double omega);

/// Largest eigenvalue of the sinc Gram matrix over N(T) n_k at w = T/(2N(T)).
double ingham_eigenvalue(const InghamConfig& config);

/// (pi^2/8) ((1 - t^2)/cos(pi t/2))^2 with t = T/N(T).
double ingham_A_T(double t);

/// (pi^2/(8 e^2)) (N(T)/T) ((1 - t^2)/cos(pi t/2))^2.
double ingham_upper_closed(double t);

/// 2 pi^2 ((1/4 - w^2)/cos(pi w))^2.
double classical_A(double omega);

struct ClassicalEnvelope {
  double value = 0.0;
  bool in_window = false;
  double window_begin = 0.0;  // (e pi / 2) N w
  long window_end = 0;        // N - 1
};

/// A_w exp(-(2n+1) ln(2(n+1)/(e pi N w))). The value is returned even outside
/// the window; in_window says whether it is a valid bound there.
ClassicalEnvelope classical_decay_envelope(long n_size, double omega, long n);

double asymptotic_upper_constant();  // 2 / e^2
double asymptotic_lower_constant();  // pi^2 / 64

/// Largest consecutive-index problem for which the full spectrum is formed.
inline constexpr long kFullProblemLimit = 2000;

struct InghamResult {
  double T = 0.0;
  long n_of_T = 0;
  double omega = 0.0;
  double eigenvalue_used = 0.0;  // top eigenvalue of the restricted problem
  double upper_bound = 0.0;      // (N(T)/T) eigenvalue_used
  double best_constant = 0.0;    // (N(T)/T) smallest restricted eigenvalue
  double closed_form = 0.0;
  double a_t = 0.0;
  double asymptotic_upper = 0.0;
  double asymptotic_lower = 0.0;
  // (N+1)-th eigenvalue of the full consecutive problem of size N(T) n_N;
  // NaN when that size exceeds kFullProblemLimit.
  double full_problem_eigenvalue = 0.0;
  long full_problem_size = 0;
  double envelope_bound = 0.0;  // A_T (N(T)/T) exp(-(2N+1) ln(4(N+1)/(e pi n_N T)))
  bool envelope_in_window = false;
  bool best_le_upper = false;        // asserted link
  bool upper_le_closed = false;      // reported
  bool upper_le_envelope = false;    // reported
  bool envelope_le_closed = false;   // reported
};

InghamResult ingham(const InghamConfig& config);

}  // namespace dhpss
