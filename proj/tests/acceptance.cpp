// Acceptance suite: one pass/fail line per criterion.
//
//   acceptance          run every criterion, exit 1 if any fails
//   acceptance 6        run criterion 6 only

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "dhpss/analysis.hpp"
#include "dhpss/ingham.hpp"
#include "oracles.hpp"

using namespace dhpss;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  const char* title;
  std::function<Outcome()> run;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

Outcome identity_case() {
  const auto t0 = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (double alpha : {0.0, 0.5, 1.0, 2.0}) {
    const Problem p = Problem::make(alpha, 1.0, 10);
    for (Method m : {Method::gram_closed_form, Method::nystrom}) {
      const Spectrum s = compute_spectrum(p.config, p.zeros, m);
      if (s.eigenvalues.size() != 10) return {false, "wrong spectrum length"};
      for (double v : s.eigenvalues) worst = std::max(worst, std::abs(v - 1.0));
    }
  }
  const double dt = seconds_since(t0);
  std::ostringstream d;
  d << "max |lambda - 1| = " << worst << ", " << dt << " s";
  return {worst <= 1e-10 && dt < 1.0, d.str()};
}

Outcome oracle_pair() {
  const auto t0 = std::chrono::steady_clock::now();
  double entry = 0.0, eig = 0.0;
  for (double alpha : {0.0, 0.5, 1.0}) {
    for (double omega : {0.3, 0.5}) {
      for (int n : {8, 16}) {
        const Problem p = Problem::make(alpha, omega, n);
        const Matrix diff = gram_matrix(p.config, p.zeros) - gram_matrix_quadrature(p.config, p.zeros);
        entry = std::max(entry, diff.cwiseAbs().maxCoeff());
        const Spectrum g = compute_spectrum(p.config, p.zeros, Method::gram_closed_form);
        const Spectrum y = compute_spectrum(p.config, p.zeros, Method::nystrom);
        for (int i = 0; i < n; ++i) eig = std::max(eig, std::abs(g.eigenvalues[i] - y.eigenvalues[i]));
      }
    }
  }
  const double dt = seconds_since(t0);
  std::ostringstream d;
  d << "max entry diff = " << entry << ", max eigenvalue diff = " << eig << ", " << dt << " s";
  return {entry <= 1e-8 && eig <= 1e-8 && dt < 30.0, d.str()};
}

Outcome half_integer_reduction() {
  const Problem p = Problem::make(0.5, 0.25, 12);
  const Matrix g = gram_matrix(p.config, p.zeros);
  const double w = 0.25;
  double worst = 0.0;
  for (int j = 1; j <= 12; ++j) {
    for (int k = 1; k <= 12; ++k) {
      const double first = j == k ? w : std::sin((j - k) * kPi * w) / ((j - k) * kPi);
      const double ref = first - std::sin((j + k) * kPi * w) / ((j + k) * kPi);
      worst = std::max(worst, std::abs(g(j - 1, k - 1) - ref));
    }
  }
  return {worst <= 1e-12, "max |rho - sinc formula| = " + fmt("%.3e", worst)};
}

Outcome bi_orthogonality() {
  const Problem p = Problem::make(0.0, 0.5, 10);
  const Spectrum s = compute_spectrum(p.config, p.zeros, Method::gram_closed_form);
  const QuadratureRule q = composite_gauss_legendre(8, kPanelPoints, 0.0, 0.5);
  std::vector<std::vector<double>> psi(10, std::vector<double>(q.size()));
  for (std::size_t n = 0; n < 10; ++n)
    for (std::size_t i = 0; i < q.size(); ++i) psi[n][i] = synthesize_eigenfunction(s, p.zeros, n, q.nodes[i]);
  double worst = 0.0;
  for (std::size_t a = 0; a < 10; ++a) {
    for (std::size_t b = 0; b < 10; ++b) {
      double ip = 0.0;
      for (std::size_t i = 0; i < q.size(); ++i) ip += q.weights[i] * psi[a][i] * psi[b][i];
      worst = std::max(worst, std::abs(ip - (a == b ? s.eigenvalues[a] : 0.0)));
    }
  }
  return {worst <= 1e-8, "max |<psi_n, psi_m>_(0,w) - lambda_n delta| = " + fmt("%.3e", worst)};
}

Outcome trace() {
  double identity = 0.0;
  for (double alpha : {0.0, 0.5, 1.0, 2.0}) {
    for (double omega : {0.3, 0.5, 0.9}) {
      for (int n : {10, 40}) {
        const Problem p = Problem::make(alpha, omega, n);
        const BoundReport r = trace_check(p.config, p.zeros);
        identity = std::max(identity, std::abs(r.get("eigen_sum_minus_trace")));
      }
    }
  }
  const Problem p = Problem::make(0.0, 0.5, 40);
  const BoundReport r = trace_check(p.config, p.zeros);
  const double estimate = r.get("estimate");
  std::ostringstream d;
  d << "max |sum - trace| = " << identity << "; trace = " << r.get("trace") << ", estimate = " << estimate
    << ", |diff| = " << r.computed << " <= 10 x " << r.get("correction");
  const bool ok = identity <= 1e-10 && std::abs(estimate - 20.125) < 1e-12 && r.satisfied;
  return {ok, d.str()};
}

Outcome sandwich() {
  int cases = 0, lower_fail = 0, upper_fail = 0;
  double worst_lower_ratio = 0.0;
  for (double alpha : {0.5, 1.0, 2.0}) {
    for (double omega : {0.3, 0.5}) {
      for (int n : {8, 16}) {
        const Problem p = Problem::make(alpha, omega, n);
        for (const auto& r : sandwich_check(p.config, p.zeros)) {
          ++cases;
          if (r.get("lower_ok") != 1.0) {
            ++lower_fail;
            worst_lower_ratio = std::max(worst_lower_ratio, r.get("lower_bound") / r.computed);
          }
          if (r.get("upper_ok") != 1.0) ++upper_fail;
        }
      }
    }
  }
  std::ostringstream d;
  d << cases << " comparisons, lower side fails " << lower_fail << ", upper side fails " << upper_fail
    << "; worst C1^2 lambda(c) / lambda~ = " << worst_lower_ratio;
  return {lower_fail == 0 && upper_fail == 0, d.str()};
}

Outcome kernel_trend() {
  std::vector<double> maxima;
  for (int n : {10, 20, 40}) {
    const Problem p = Problem::make(0.0, 0.5, n);
    maxima.push_back(kernel_residual(p.config, p.zeros, 50).max_residual);
  }
  const bool ok = maxima[1] <= 1.05 * maxima[0] && maxima[2] <= 1.05 * maxima[1];
  std::ostringstream d;
  d << "max residual N=10,20,40: " << maxima[0] << ", " << maxima[1] << ", " << maxima[2];
  return {ok, d.str()};
}

Outcome plunge_growth() {
  const PlungeFit fit = plunge_fit(0.0, 0.5, 0.01, {20, 80});
  std::ostringstream d;
  d << "count(20) = " << fit.counts[0] << ", count(80) = " << fit.counts[1] << ", fitted K = " << fit.fitted[0]
    << ", " << fit.fitted[1];
  return {fit.counts[0] > 0 && fit.counts[1] <= 3 * fit.counts[0], d.str()};
}

Outcome decay_envelope_check() {
  const Problem p = Problem::make(0.0, 0.3, 20);
  const auto reports = decay_check(p.config, p.zeros);
  bool ok = reports.size() > 1;
  for (std::size_t i = 0; i + 1 < reports.size(); ++i) ok = ok && reports[i].satisfied;
  const BoundReport& fit = reports.back();
  std::ostringstream d;
  d << "window n = " << fit.get("window_begin") << ".." << fit.get("window_end")
    << ", fitted constant (stated exponent) = " << fit.get("fitted_constant_stated")
    << ", (proof exponent) = " << fit.get("fitted_constant_proof_form");
  return {ok, d.str()};
}

Outcome ingham_limit() {
  const double target = 2.0 / (std::numbers::e * std::numbers::e);
  const double closed = ingham_upper_closed(1000.0);
  const double rel = std::abs(closed / target - 1.0);
  const bool constants = asymptotic_upper_constant() == 2.0 / std::exp(2.0) &&
                         asymptotic_lower_constant() == kPi * kPi / 64.0;
  std::ostringstream d;
  d.precision(10);
  d << "closed form at T=1000 = " << closed << " (2/e^2 = " << target << ", rel " << rel << ")";
  return {rel <= 1e-3 && constants, d.str()};
}

Outcome v_bounds() {
  int bad = 0;
  for (int i = 1; i <= 50; ++i) {
    const double r = 1.9 * i / 50.0;
    const double v = v_integral(r);
    if (v < r / (2.0 * (4.0 - r * r)) || v > r / (4.0 - r * r)) ++bad;
  }
  return {bad == 0, std::to_string(50 - bad) + "/50 grid points inside the bounds"};
}

Outcome bessel_layer() {
  double residual = 0.0;
  for (double alpha : {-0.5, 0.0, 0.5, 1.0, 2.0}) {
    const ZeroTable z = find_zeros(Order(alpha), 50);
    for (std::size_t n = 1; n <= 50; ++n) residual = std::max(residual, std::abs(eval_j(Order(alpha), z.zero(n))));
  }
  double trig = 0.0;
  for (double x = 0.01; x < 100.0; x += 0.173) {
    trig = std::max(trig, std::abs(eval_j(Order(0.5), x) - oracle::j_half(x)));
    trig = std::max(trig, std::abs(eval_j(Order(-0.5), x) - oracle::j_minus_half(x)));
    trig = std::max(trig, std::abs(eval_j(Order(1.5), x) - oracle::j_three_halves(x)));
  }
  std::ostringstream d;
  d << "max |J(s_n)| = " << residual << ", max half-integer deviation = " << trig;
  return {residual < 1e-10 && trig <= 1e-12, d.str()};
}

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {1, "identity case (omega = 1)", identity_case},
      {2, "gram / quadrature / Nystrom oracle pair", oracle_pair},
      {3, "half-integer sinc reduction", half_integer_reduction},
      {4, "bi-orthogonality", bi_orthogonality},
      {5, "trace identity and estimate", trace},
      {6, "discrete / continuous sandwich", sandwich},
      {7, "kernel residual trend", kernel_trend},
      {8, "plunge growth", plunge_growth},
      {9, "decay envelope", decay_envelope_check},
      {10, "Ingham limit and constants", ingham_limit},
      {11, "V(r) bounds", v_bounds},
      {12, "Bessel zeros and half-integer values", bessel_layer},
  };
  return all;
}

bool run(const Criterion& c) {
  Outcome o;
  try {
    o = c.run();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  std::printf("[%s] c%02d %s: %s\n", o.pass ? "PASS" : "FAIL", c.id, c.title, o.detail.c_str());
  std::fflush(stdout);
  return o.pass;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 2) {
    std::fprintf(stderr, "usage: %s [criterion]\n", argv[0]);
    return 2;
  }
  if (argc == 2) {
    const int id = std::atoi(argv[1]);
    for (const auto& c : criteria()) {
      if (c.id == id) return run(c) ? 0 : 1;
    }
    std::fprintf(stderr, "no criterion %s\n", argv[1]);
    return 2;
  }
  int failed = 0;
  for (const auto& c : criteria()) failed += run(c) ? 0 : 1;
  std::printf("%zu criteria, %d failed\n", criteria().size(), failed);
  return failed == 0 ? 0 : 1;
}
