#include "dhpss/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <sstream>

#include "dhpss/errors.hpp"

namespace dhpss {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kE = std::numbers::e;

// Symmetric Nystrom matrix of K_c on the nodes of `quad`, using one pair of
// Bessel evaluations per node for the divided-difference branch.
Matrix continuous_nystrom(BandwidthC c, Order order, const QuadratureRule& quad) {
  const auto m = static_cast<Eigen::Index>(quad.size());
  const double cv = c.value();
  const Order next(order.value() + 1.0);
  Vector t(m), ja(m), jb(m), sw(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    t(i) = cv * quad.nodes[i];
    ja(i) = eval_j(order, t(i));
    jb(i) = eval_j(next, t(i));
    sw(i) = std::sqrt(quad.weights[i]);
  }
  Matrix a(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = i; j < m; ++j) {
      const double x = t(i);
      const double y = t(j);
      double g;
      if (std::abs(x - y) < kDiagonalSwitch * std::max({1.0, x, y})) {
        g = continuous_G(order, x, y);
      } else {
        g = std::sqrt(x * y) * (x * jb(i) * ja(j) - y * jb(j) * ja(i)) / ((x - y) * (x + y));
      }
      a(i, j) = sw(i) * sw(j) * cv * g;
      a(j, i) = a(i, j);
    }
  }
  return a;
}

std::vector<double> gram_eigenvalues(const ProblemConfig& config, const ZeroTable& zeros) {
  return compute_spectrum(config, zeros, Method::gram_closed_form).eigenvalues;
}

void require_eps(double eps) {
  if (!(eps > 0.0 && eps < 0.5)) throw DomainError("eps must be in (0, 0.5)");
}

}  // namespace

double BoundReport::get(std::string_view key) const {
  for (const auto& [k, v] : context) {
    if (k == key) return v;
  }
  throw IndexError("BoundReport '" + name + "' has no context key '" + std::string(key) + "'");
}

BoundReport make_report(std::string name, double computed, double bound, double tolerance, bool asserted) {
  BoundReport r;
  r.name = std::move(name);
  r.computed = computed;
  r.bound = bound;
  r.margin = bound - computed;
  r.tolerance = tolerance;
  r.satisfied = r.margin >= -tolerance;
  r.asserted = asserted;
  return r;
}

// ---------------------------------------------------------------------------

DecayEnvelope decay_envelope(const ProblemConfig& config, const ZeroTable& zeros, int n) {
  const int big_n = config.n_basis;
  const double alpha = config.order.value();
  const double omega = config.band.omega();
  const double s_next = zeros.zero(static_cast<std::size_t>(big_n) + 1);
  const double zeta = zeros.zeta_upto(static_cast<std::size_t>(big_n) + 1);

  DecayEnvelope env;
  env.window_begin = static_cast<int>(std::ceil(kE * omega * s_next / 4.0));
  env.window_end = big_n - 1;
  env.in_window = n >= env.window_begin && n <= env.window_end;

  const double log_pref = 0.5 * std::log(2.0 / kE) - std::log(zeta) - 0.5 * std::log(2.0 * big_n + alpha + 1.5);
  const double log_base = std::log(kE * omega * s_next / (4.0 * n + 2.0 * alpha + 3.0));
  env.stated = std::exp(log_pref + (2.0 * n + alpha + 0.5) * log_base);
  env.proof_form = std::exp(log_pref + (2.0 * n + alpha + 1.5) * log_base);
  return env;
}

std::vector<BoundReport> decay_check(const ProblemConfig& config, const ZeroTable& zeros) {
  const std::vector<double> lambda = gram_eigenvalues(config, zeros);
  std::vector<BoundReport> out;

  double fitted_stated = 0.0;
  double fitted_proof = 0.0;
  int proof_ok = 0;
  const DecayEnvelope probe = decay_envelope(config, zeros, config.n_basis - 1);
  for (int n = probe.window_begin; n <= probe.window_end; ++n) {
    const DecayEnvelope env = decay_envelope(config, zeros, n);
    const double value = lambda[static_cast<std::size_t>(n)];
    BoundReport r = make_report("decay[" + std::to_string(n) + "]", value, kDecayAllowance * env.stated, 0.0);
    const double ratio_stated = value / env.stated;
    const double ratio_proof = value / env.proof_form;
    r.context = {{"n", n},
                 {"envelope_stated", env.stated},
                 {"envelope_proof_form", env.proof_form},
                 {"ratio_stated", ratio_stated},
                 {"ratio_proof_form", ratio_proof}};
    fitted_stated = std::max(fitted_stated, ratio_stated);
    fitted_proof = std::max(fitted_proof, ratio_proof);
    if (value <= kDecayAllowance * env.proof_form) ++proof_ok;
    out.push_back(std::move(r));
  }

  const int window_size = std::max(0, probe.window_end - probe.window_begin + 1);
  BoundReport fit = make_report("decay_fit", fitted_stated, kDecayAllowance, 0.0, false);
  fit.context = {{"window_begin", probe.window_begin},
                 {"window_end", probe.window_end},
                 {"fitted_constant_stated", fitted_stated},
                 {"fitted_constant_proof_form", fitted_proof},
                 {"proof_form_within_allowance", proof_ok},
                 {"window_size", window_size}};
  fit.note = window_size == 0 ? "validity window is empty"
                              : "largest lambda_n / envelope over the window (implicit constant)";
  out.push_back(std::move(fit));
  return out;
}

// ---------------------------------------------------------------------------

ComparisonConstants comparison_constants(Order order, Band band, const ZeroTable& zeros, int n_basis) {
  const double alpha = order.value();
  if (!(alpha > 0.0)) throw DomainError("sandwich requires alpha > 0");
  const double omega = band.omega();

  ComparisonConstants k;
  k.zeta = zeros.zeta_upto(static_cast<std::size_t>(n_basis));
  k.eps = std::min(k.zeta, zeros.zero(1));
  k.c = omega * (zeros.zero(static_cast<std::size_t>(n_basis)) + k.eps);
  if (alpha >= 0.5) {
    k.M_alpha = std::pow(2.0, 2.0 * alpha - 0.5);
    k.m_alpha = std::pow(2.0, 2.0 * alpha - 0.5) / std::sqrt(2.0 * alpha);
  } else {
    k.M_alpha = std::pow(2.0, 2.0 - 5.0 * alpha) / std::sqrt(alpha);
    k.m_alpha = std::pow(2.0, alpha - 0.5);
  }
  const double gamma_ratio = std::tgamma(alpha + 1.0) / std::tgamma(alpha + 0.5);
  const double root_eps = std::sqrt(k.eps);
  k.c1 = 2.0 / root_eps * gamma_ratio * k.m_alpha;
  k.c1_proof = std::pow(2.0, alpha) * gamma_ratio * k.m_alpha / root_eps;
  const double arg = k.eps * omega;
  k.c2 = std::pow(arg, alpha) / eval_j(order, arg) * k.M_alpha / root_eps;
  return k;
}

QuadratureRule continuous_rule(BandwidthC c) {
  const int panels = std::max(1, static_cast<int>(std::ceil(c.value() / kPi)));
  return composite_gauss_legendre(panels, kPanelPoints, 0.0, 1.0);
}

std::vector<double> continuous_spectrum(BandwidthC c, Order order, int modes, const QuadratureRule& quad) {
  if (modes > static_cast<int>(quad.size())) {
    throw DomainError("continuous_spectrum: modes exceed the quadrature size");
  }
  const EigenSystem es = eigensystem(continuous_nystrom(c, order, quad));
  std::vector<double> values = es.values;
  if (modes > 0) values.resize(static_cast<std::size_t>(modes));
  return clamp_eigenvalues(std::move(values));
}

std::vector<BoundReport> sandwich_check(const ProblemConfig& config, const ZeroTable& zeros) {
  const ComparisonConstants k = comparison_constants(config.order, config.band, zeros, config.n_basis);
  const std::vector<double> discrete = gram_eigenvalues(config, zeros);
  const BandwidthC c(k.c);
  const std::vector<double> cont = continuous_spectrum(c, config.order, config.n_basis, continuous_rule(c));

  const double c1sq = k.c1 * k.c1;
  const double c2sq = k.c2 * k.c2;
  const double c1psq = k.c1_proof * k.c1_proof;
  std::vector<BoundReport> out;
  for (int n = 0; n < config.n_basis; ++n) {
    const double value = discrete[static_cast<std::size_t>(n)];
    const double lc = cont[static_cast<std::size_t>(n)];
    const double lower = c1sq * lc;
    const double upper = c2sq * lc;
    BoundReport r = make_report("sandwich[" + std::to_string(n) + "]", value, upper, kSandwichSlack);
    const bool lower_ok = lower <= value + kSandwichSlack;
    const bool upper_ok = value <= upper + kSandwichSlack;
    r.margin = std::min(upper - value, value - lower);
    r.satisfied = lower_ok && upper_ok;
    r.context = {{"n", n},
                 {"lambda_continuous", lc},
                 {"lower_bound", lower},
                 {"upper_bound", upper},
                 {"lower_ok", lower_ok},
                 {"upper_ok", upper_ok},
                 {"c1_squared", c1sq},
                 {"c2_squared", c2sq},
                 {"c1_proof_form_squared", c1psq},
                 {"lower_proof_form_ok", c1psq * lc <= value + kSandwichSlack},
                 {"eps", k.eps},
                 {"c", k.c}};
    if (!lower_ok) r.note = "lower side fails with the stated constant";
    out.push_back(std::move(r));
  }
  return out;
}

// ---------------------------------------------------------------------------

double kernel_residual_at(const ProblemConfig& config, const ZeroTable& zeros, double x, double y) {
  const BandwidthC c_n = BandwidthC::asymptotic(config.order, config.n_basis);
  return discrete_kernel(config, zeros, x, y) - continuous_K(c_n, config.order, x, y) -
         correction_F(c_n, config.order, x, y);
}

KernelResidual kernel_residual(const ProblemConfig& config, const ZeroTable& zeros, int grid_size) {
  if (grid_size < 1) throw DomainError("kernel_residual: grid size must be >= 1");
  const double omega = config.band.omega();
  const BandwidthC c_n = BandwidthC::asymptotic(config.order, config.n_basis);
  const auto g = static_cast<std::size_t>(grid_size);

  std::vector<double> x(g);
  for (std::size_t i = 0; i < g; ++i) x[i] = (i + 0.5) * omega / grid_size;
  std::vector<std::vector<double>> phi(g, std::vector<double>(config.n_basis));
  for (std::size_t i = 0; i < g; ++i)
    for (int k = 0; k < config.n_basis; ++k) phi[i][k] = basis_phi(zeros, k + 1, x[i]);

  KernelResidual out;
  double sum_sq = 0.0;
  for (std::size_t i = 0; i < g; ++i) {
    for (std::size_t j = i; j < g; ++j) {
      const double kn = std::inner_product(phi[i].begin(), phi[i].end(), phi[j].begin(), 0.0);
      const double r = kn - continuous_K(c_n, config.order, x[i], x[j]) -
                       correction_F(c_n, config.order, x[i], x[j]);
      out.max_residual = std::max(out.max_residual, std::abs(r));
      sum_sq += (i == j ? 1.0 : 2.0) * r * r;
    }
  }
  out.rms_residual = std::sqrt(sum_sq / static_cast<double>(g * g));
  return out;
}

BoundReport kernel_check(const ProblemConfig& config, const ZeroTable& zeros) {
  const KernelResidual res = kernel_residual(config, zeros, kKernelGrid);
  const double c_n = BandwidthC::asymptotic(config.order, config.n_basis).value();
  BoundReport r = make_report("kernel", res.max_residual, 1.0 / c_n, 0.0, false);
  r.context = {{"c_N", c_n},
               {"rms_residual", res.rms_residual},
               {"grid", kKernelGrid},
               {"fitted_constant", res.max_residual * c_n}};
  r.note = "remainder is O(1/c_N) with an unspecified constant";
  return r;
}

// ---------------------------------------------------------------------------

BoundReport l2_spectral_distance(const ProblemConfig& config, const ZeroTable& zeros) {
  const double omega = config.band.omega();
  const BandwidthC c = BandwidthC::from_config(config);
  std::vector<double> discrete = gram_eigenvalues(config, zeros);
  std::vector<double> cont = continuous_spectrum(c, config.order, 0, continuous_rule(c));
  const std::size_t len = std::max(discrete.size(), cont.size());
  discrete.resize(len, 0.0);
  cont.resize(len, 0.0);

  double lhs = 0.0;
  for (std::size_t i = 0; i < len; ++i) lhs += (discrete[i] - cont[i]) * (discrete[i] - cont[i]);

  const bool in_hypothesis = omega < 1.0;
  const double log_term = in_hypothesis ? std::log(1.0 / (1.0 - omega * omega))
                                        : std::numeric_limits<double>::infinity();
  const double bound = (2.0 / kPi) * std::sqrt(log_term);
  BoundReport r = make_report("l2", lhs, bound, kSandwichSlack, omega <= 0.9);
  r.context = {{"c", c.value()},
               {"distance", std::sqrt(lhs)},
               {"hilbert_schmidt_bound_squared", 4.0 / (kPi * kPi) * log_term},
               {"fitted_C", std::max(0.0, lhs - bound) * c.value() / (omega * omega)},
               {"paired_length", static_cast<double>(len)}};
  if (!r.asserted) r.note = "omega > 0.9: omega term not asserted alone";
  return r;
}

BoundReport trace_check(const ProblemConfig& config, const ZeroTable& zeros) {
  const double omega = config.band.omega();
  const double alpha = config.order.value();
  const BandwidthC c = BandwidthC::from_config(config);

  double trace = 0.0;
  for (int j = 1; j <= config.n_basis; ++j) trace += gram_diagonal(config, zeros, j);
  const std::vector<double> lambda = gram_eigenvalues(config, zeros);
  const double eigen_sum = std::accumulate(lambda.begin(), lambda.end(), 0.0);
  if (std::abs(eigen_sum - trace) > 1e-10 * std::max(1.0, trace)) {
    std::ostringstream msg;
    msg << "trace identity violated: sum of eigenvalues " << eigen_sum << " vs trace " << trace;
    throw NumericalError(msg.str());
  }

  const double estimate = c.value() / kPi - alpha / 2.0;
  const bool in_hypothesis = omega < 1.0;
  const double correction = in_hypothesis
                                ? (1.0 + omega * omega) / c.value() +
                                      std::log((1.0 + omega) / (1.0 - omega)) / (2.0 * kPi)
                                : std::numeric_limits<double>::infinity();
  BoundReport r = make_report("trace", std::abs(trace - estimate), kTraceAllowance * correction, 0.0, in_hypothesis);
  r.context = {{"c", c.value()},
               {"trace", trace},
               {"estimate", estimate},
               {"correction", correction},
               {"fitted_constant", std::abs(trace - estimate) / correction},
               {"eigen_sum", eigen_sum},
               {"eigen_sum_minus_trace", eigen_sum - trace}};
  if (!in_hypothesis) r.note = "omega = 1 lies outside the estimate's hypothesis 0 < omega < 1";
  return r;
}

int plunge_count(const Spectrum& spectrum, double eps) {
  require_eps(eps);
  return static_cast<int>(std::count_if(spectrum.eigenvalues.begin(), spectrum.eigenvalues.end(),
                                        [eps](double v) { return v > eps && v < 1.0 - eps; }));
}

double plunge_G(double omega) {
  if (!(omega > 0.0 && omega < 1.0)) throw DomainError("plunge bound requires 0 < omega < 1");
  const double w = omega;
  return (0.5 + w) * std::log((1.0 + w) / (1.0 - w)) +
         std::log(4.0 * (1.0 - w * w) / (4.0 - w * w) * std::sqrt((2.0 - w) / (2.0 + w))) +
         2.0 * w * (2.0 + w) / (1.0 - w * w) * std::log1p(w / 2.0);
}

double plunge_bound(const ProblemConfig& config, double eps) {
  require_eps(eps);
  const double omega = config.band.omega();
  const double g = plunge_G(omega);
  const double c = BandwidthC::from_config(config).value();
  return (omega * omega / c + std::log(c) + g) / (eps * (1.0 - eps));
}

BoundReport plunge_check(const ProblemConfig& config, const ZeroTable& zeros, double eps) {
  require_eps(eps);
  const Spectrum spectrum = compute_spectrum(config, zeros, Method::gram_closed_form);
  const int count = plunge_count(spectrum, eps);
  const double bound = plunge_bound(config, eps);
  BoundReport r = make_report("plunge", count, bound, 0.0, false);
  r.context = {{"eps", eps},
               {"c", BandwidthC::from_config(config).value()},
               {"G_omega", plunge_G(config.band.omega())},
               {"fitted_K", count / bound}};
  r.note = "K_alpha is unspecified; fitted_K = count / bracket";
  return r;
}

PlungeFit plunge_fit(double alpha, double omega, double eps, const std::vector<int>& n_values) {
  require_eps(eps);
  PlungeFit fit;
  for (int n : n_values) {
    const Problem p = Problem::make(alpha, omega, n);
    const Spectrum s = compute_spectrum(p.config, p.zeros, Method::gram_closed_form);
    const int count = plunge_count(s, eps);
    const double bracket = plunge_bound(p.config, eps);
    fit.n_values.push_back(n);
    fit.counts.push_back(count);
    fit.brackets.push_back(bracket);
    fit.fitted.push_back(count / bracket);
  }
  if (!fit.fitted.empty()) {
    fit.mean = std::accumulate(fit.fitted.begin(), fit.fitted.end(), 0.0) / fit.fitted.size();
    for (double f : fit.fitted) {
      if (fit.mean > 0.0) fit.max_relative_deviation = std::max(fit.max_relative_deviation, std::abs(f - fit.mean) / fit.mean);
    }
  }
  return fit;
}

}  // namespace dhpss
