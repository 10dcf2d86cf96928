#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dhpss/kernels.hpp"
#include "dhpss/quadrature.hpp"
#include "dhpss/spectra.hpp"

namespace dhpss {

/// A computed quantity set against a bound. `asserted` is false for checks
/// whose constant is unspecified (fitted diagnostics); those never count as
/// hard failures.
struct BoundReport {
  std::string name;
  double computed = 0.0;
  double bound = 0.0;
  double margin = 0.0;  // bound - computed
  double tolerance = 0.0;
  bool satisfied = false;
  bool asserted = true;
  std::vector<std::pair<std::string, double>> context;
  std::string note;

  double get(std::string_view key) const;  // context lookup, throws IndexError
};

BoundReport make_report(std::string name, double computed, double bound, double tolerance,
                        bool asserted = true);

// ---------------------------------------------------------------------------
// Decay envelope of the leading eigenvalues

struct DecayEnvelope {
  double stated = 0.0;      // exponent 2n + alpha + 1/2
  double proof_form = 0.0;  // exponent 2n + alpha + 3/2
  bool in_window = false;
  int window_begin = 0;  // ceil(e omega s_{N+1} / 4)
  int window_end = 0;    // N - 1
};

/// Envelope sqrt(2/e) / (zeta sqrt(2N + a + 3/2)) (e omega s_{N+1} / (4n + 2a + 3))^p
/// with implicit constant 1. zeros must hold s_{N+1}.
DecayEnvelope decay_envelope(const ProblemConfig& config, const ZeroTable& zeros, int n);

/// Slack factor that absorbs the unspecified implicit constant.
inline constexpr double kDecayAllowance = 10.0;

/// One report per n in the validity window (lambda_n <= 10 x envelope) plus a
/// closing "decay_fit" diagnostic carrying the fitted constants.
std::vector<BoundReport> decay_check(const ProblemConfig& config, const ZeroTable& zeros);

// ---------------------------------------------------------------------------
// Discrete / continuous comparison

struct ComparisonConstants {
  double zeta = 0.0;
  double eps = 0.0;  // min(zeta, s_1)
  double c = 0.0;    // omega (s_N + eps)
  double c1 = 0.0;   // lower constant as stated
  double c1_proof = 0.0;  // (2/eps)^a Gamma(a+1) m_a eps^{a-1/2} / Gamma(a+1/2)
  double c2 = 0.0;
  double m_alpha = 0.0;
  double M_alpha = 0.0;
};

/// Requires alpha > 0.
ComparisonConstants comparison_constants(Order order, Band band, const ZeroTable& zeros, int n_basis);

/// ceil(c / pi) panels of kPanelPoints nodes on (0, 1).
QuadratureRule continuous_rule(BandwidthC c);

/// Leading `modes` eigenvalues (descending, clamped into [0, 1]) of the Nystrom
/// discretisation of K_c on (0, 1). modes <= 0 returns every eigenvalue.
std::vector<double> continuous_spectrum(BandwidthC c, Order order, int modes, const QuadratureRule& quad);

inline constexpr double kSandwichSlack = 1e-8;

/// One report per n < N: C1^2 lambda_n(c) <= lambda~_n <= C2^2 lambda_n(c).
/// bound is the upper side; margin is the smaller of the two side margins.
std::vector<BoundReport> sandwich_check(const ProblemConfig& config, const ZeroTable& zeros);

// ---------------------------------------------------------------------------
// Kernel approximation

/// K_N(x, y) - K_{c_N}(x, y) - F_{c_N}(x, y).
double kernel_residual_at(const ProblemConfig& config, const ZeroTable& zeros, double x, double y);

struct KernelResidual {
  double max_residual = 0.0;
  double rms_residual = 0.0;
};

/// Residual over the grid_size x grid_size cell-midpoint grid of (0, omega)^2.
KernelResidual kernel_residual(const ProblemConfig& config, const ZeroTable& zeros, int grid_size);

inline constexpr int kKernelGrid = 50;

/// Diagnostic: computed = max residual over the kKernelGrid midpoint grid,
/// bound = 1 / c_N (the remainder order; its constant is unspecified).
BoundReport kernel_check(const ProblemConfig& config, const ZeroTable& zeros);

// ---------------------------------------------------------------------------
// Spectral distance, trace, plunge region

BoundReport l2_spectral_distance(const ProblemConfig& config, const ZeroTable& zeros);

inline constexpr double kTraceAllowance = 10.0;

/// computed = |trace - (c/pi - alpha/2)|, bound = kTraceAllowance x correction.
/// Throws NumericalError if the eigenvalue sum drifts from the trace by more
/// than 1e-10 (relative to max(1, trace)).
BoundReport trace_check(const ProblemConfig& config, const ZeroTable& zeros);

/// #{n : eps < lambda_n < 1 - eps}, 0 < eps < 1/2.
int plunge_count(const Spectrum& spectrum, double eps);

/// (1/2 + w) ln((1+w)/(1-w)) + ln(4(1-w^2)/(4-w^2) sqrt((2-w)/(2+w)))
///   + 2 w (2+w)/(1-w^2) ln(1 + w/2), 0 < w < 1.
double plunge_G(double omega);

/// [omega^2/c + ln c + G(omega)] / (eps (1 - eps)), without the constant K_alpha.
double plunge_bound(const ProblemConfig& config, double eps);

/// Diagnostic: computed = exact count, bound = plunge_bound, fitted K = ratio.
BoundReport plunge_check(const ProblemConfig& config, const ZeroTable& zeros, double eps);

struct PlungeFit {
  std::vector<int> n_values;
  std::vector<int> counts;
  std::vector<double> brackets;
  std::vector<double> fitted;  // counts / brackets
  double mean = 0.0;
  double max_relative_deviation = 0.0;  // max |fitted - mean| / mean
};

PlungeFit plunge_fit(double alpha, double omega, double eps, const std::vector<int>& n_values);

}  // namespace dhpss
