#include "dhpss/ingham.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "dhpss/errors.hpp"

namespace dhpss {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kE = std::numbers::e;

void require_t(double t) {
  if (!(t > 1.0) || !std::isfinite(t)) throw DomainError("T must be > 1");
}
}  // namespace

InghamConfig::InghamConfig(double t, std::vector<long> frequencies) : t_(t), freqs_(std::move(frequencies)) {
  require_t(t);
  if (freqs_.empty()) throw DomainError("frequencies must not be empty");
  if (freqs_.front() < 1) throw DomainError("frequencies must be positive integers");
  for (std::size_t i = 1; i < freqs_.size(); ++i) {
    if (freqs_[i] <= freqs_[i - 1]) throw DomainError("frequencies must be strictly increasing");
  }
}

InghamConfig InghamConfig::consecutive(double t, long count) {
  if (count < 1) throw DomainError("frequency count must be >= 1");
  std::vector<long> f(static_cast<std::size_t>(count));
  for (long i = 0; i < count; ++i) f[static_cast<std::size_t>(i)] = i + 1;
  return InghamConfig(t, std::move(f));
}

long InghamConfig::n_of_T() const { return static_cast<long>(std::floor(t_)) + 1; }

double InghamConfig::omega() const { return t_ / (2.0 * static_cast<double>(n_of_T())); }

std::vector<long> InghamConfig::scaled_indices() const {
  std::vector<long> out(freqs_);
  const long nt = n_of_T();
  for (long& v : out) v *= nt;
  return out;
}

Matrix sinc_gram(const std::vector<long>& indices, double omega) {
  if (!(omega > 0.0 && omega < 0.5)) throw DomainError("omega must be in (0, 0.5)");
  for (std::size_t i = 1; i < indices.size(); ++i) {
    if (indices[i] <= indices[i - 1]) throw DomainError("indices must be strictly increasing");
  }
  const auto n = static_cast<Eigen::Index>(indices.size());
  Matrix g(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    g(i, i) = 2.0 * omega;
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const double d = static_cast<double>(indices[i] - indices[j]);
      g(i, j) = std::sin(2.0 * kPi * d * omega) / (kPi * d);
      g(j, i) = g(i, j);
    }
  }
  return g;
}

double ingham_eigenvalue(const InghamConfig& config) {
  const EigenSystem es = eigensystem(sinc_gram(config.scaled_indices(), config.omega()));
  return es.values.front();
}

double ingham_A_T(double t) {
  require_t(t);
  const double r = t / (std::floor(t) + 1.0);
  const double q = (1.0 - r * r) / std::cos(kPi * r / 2.0);
  return kPi * kPi / 8.0 * q * q;
}

double ingham_upper_closed(double t) {
  require_t(t);
  const double nt = std::floor(t) + 1.0;
  return ingham_A_T(t) * nt / t / (kE * kE);
}

double classical_A(double omega) {
  if (!(omega > 0.0 && omega < 0.5)) throw DomainError("omega must be in (0, 0.5)");
  const double q = (0.25 - omega * omega) / std::cos(kPi * omega);
  return 2.0 * kPi * kPi * q * q;
}

ClassicalEnvelope classical_decay_envelope(long n_size, double omega, long n) {
  if (n_size < 1) throw DomainError("N must be >= 1");
  if (n < 0) throw DomainError("n must be >= 0");
  ClassicalEnvelope env;
  env.window_begin = kE * kPi / 2.0 * static_cast<double>(n_size) * omega;
  env.window_end = n_size - 1;
  env.in_window = static_cast<double>(n) >= env.window_begin && n <= env.window_end;
  const double rate = std::log(2.0 * (n + 1.0) / (kE * kPi * static_cast<double>(n_size) * omega));
  env.value = classical_A(omega) * std::exp(-(2.0 * n + 1.0) * rate);
  return env;
}

double asymptotic_upper_constant() { return 2.0 / (kE * kE); }

double asymptotic_lower_constant() { return kPi * kPi / 64.0; }

InghamResult ingham(const InghamConfig& config) {
  InghamResult r;
  r.T = config.T();
  r.n_of_T = config.n_of_T();
  r.omega = config.omega();
  const double scale = static_cast<double>(r.n_of_T) / r.T;

  const EigenSystem es = eigensystem(sinc_gram(config.scaled_indices(), r.omega));
  r.eigenvalue_used = es.values.front();
  r.upper_bound = scale * r.eigenvalue_used;
  r.best_constant = scale * std::max(0.0, es.values.back());
  r.closed_form = ingham_upper_closed(r.T);
  r.a_t = ingham_A_T(r.T);
  r.asymptotic_upper = asymptotic_upper_constant();
  r.asymptotic_lower = asymptotic_lower_constant();

  const long count = static_cast<long>(config.frequencies().size());
  const long n_last = config.frequencies().back();
  r.full_problem_size = r.n_of_T * n_last;
  if (r.full_problem_size <= kFullProblemLimit && count < r.full_problem_size) {
    std::vector<long> all(static_cast<std::size_t>(r.full_problem_size));
    for (long i = 0; i < r.full_problem_size; ++i) all[static_cast<std::size_t>(i)] = i + 1;
    const EigenSystem full = eigensystem(sinc_gram(all, r.omega));
    r.full_problem_eigenvalue = full.values[static_cast<std::size_t>(count)];
  } else {
    r.full_problem_eigenvalue = std::numeric_limits<double>::quiet_NaN();
  }

  const ClassicalEnvelope env = classical_decay_envelope(r.full_problem_size, r.omega, count);
  r.envelope_in_window = env.in_window;
  r.envelope_bound = scale * env.value;

  r.best_le_upper = r.best_constant <= r.upper_bound * (1.0 + 1e-12);
  r.upper_le_closed = r.upper_bound <= r.closed_form;
  r.upper_le_envelope = r.upper_bound <= r.envelope_bound;
  r.envelope_le_closed = r.envelope_bound <= r.closed_form;
  return r;
}

}  // namespace dhpss
