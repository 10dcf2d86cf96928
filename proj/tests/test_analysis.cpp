#include <doctest.h>

#include <cmath>
#include <numbers>

#include "dhpss/analysis.hpp"
#include "dhpss/errors.hpp"
#include "oracles.hpp"

using namespace dhpss;

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kE = std::numbers::e;
}  // namespace

TEST_SUITE("analysis") {

TEST_CASE("report plumbing") {
  BoundReport r = make_report("x", 1.0, 2.0, 0.1);
  CHECK(r.margin == 1.0);
  CHECK(r.satisfied);
  CHECK(make_report("y", 2.05, 2.0, 0.1).satisfied);
  CHECK_FALSE(make_report("z", 2.2, 2.0, 0.1).satisfied);
  r.context = {{"k", 3.0}};
  CHECK(r.get("k") == 3.0);
  CHECK_THROWS_AS(r.get("missing"), IndexError);
}

TEST_CASE("decay envelope by hand") {
  const Problem p = Problem::make(0.0, 0.3, 20);
  const double s21 = p.zeros.zero(21);
  const double zeta = p.zeros.zeta_upto(21);
  const int n = 15;
  const double base = kE * 0.3 * s21 / (4.0 * n + 3.0);
  const double pref = std::sqrt(2.0 / kE) / (zeta * std::sqrt(41.5));
  const DecayEnvelope env = decay_envelope(p.config, p.zeros, n);
  CHECK(env.stated == doctest::Approx(pref * std::pow(base, 2.0 * n + 0.5)).epsilon(1e-12));
  CHECK(env.proof_form == doctest::Approx(pref * std::pow(base, 2.0 * n + 1.5)).epsilon(1e-12));
  CHECK(env.window_begin == static_cast<int>(std::ceil(kE * 0.3 * s21 / 4.0)));
  CHECK(env.window_end == 19);
  CHECK(env.in_window);
  CHECK_FALSE(decay_envelope(p.config, p.zeros, 2).in_window);
}

TEST_CASE("decay envelope decreases over the window and bounds the spectrum") {
  const Problem p = Problem::make(0.0, 0.3, 20);
  const DecayEnvelope first = decay_envelope(p.config, p.zeros, 19);
  double prev = INFINITY;
  for (int n = first.window_begin; n <= first.window_end; ++n) {
    const double v = decay_envelope(p.config, p.zeros, n).stated;
    CHECK(v < prev);
    prev = v;
  }
  const auto reports = decay_check(p.config, p.zeros);
  REQUIRE(reports.size() == static_cast<std::size_t>(first.window_end - first.window_begin + 2));
  for (const auto& r : reports) CHECK(r.satisfied);
  CHECK(reports.back().name == "decay_fit");
  CHECK_FALSE(reports.back().asserted);
}

TEST_CASE("comparison constants") {
  const Problem p = Problem::make(0.5, 0.3, 8);
  const ComparisonConstants k = comparison_constants(p.config.order, p.config.band, p.zeros, 8);
  // 2^(2a - 1/2) / sqrt(2a) and 2^(2a - 1/2) at a = 1/2
  CHECK(k.m_alpha == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(k.M_alpha == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(k.eps == doctest::Approx(std::min(p.zeros.zeta_upto(8), p.zeros.zero(1))).epsilon(1e-15));
  CHECK(k.c == doctest::Approx(0.3 * (p.zeros.zero(8) + k.eps)).epsilon(1e-15));
  CHECK(k.c1 == doctest::Approx(2.0 / std::sqrt(k.eps) * std::tgamma(1.5) / std::tgamma(1.0) * std::sqrt(2.0)).epsilon(1e-12));
  const double x = k.eps * 0.3;
  CHECK(k.c2 == doctest::Approx(std::sqrt(x) / oracle::j_half(x) * std::sqrt(2.0) / std::sqrt(k.eps)).epsilon(1e-12));

  const Problem q = Problem::make(0.25, 0.3, 8);
  const ComparisonConstants kq = comparison_constants(q.config.order, q.config.band, q.zeros, 8);
  CHECK(kq.m_alpha == doctest::Approx(std::pow(2.0, -0.25)).epsilon(1e-15));
  CHECK(kq.M_alpha == doctest::Approx(std::pow(2.0, 0.75) / 0.5).epsilon(1e-15));

  const Problem z = Problem::make(0.0, 0.3, 8);
  CHECK_THROWS_WITH(comparison_constants(z.config.order, z.config.band, z.zeros, 8), "sandwich requires alpha > 0");
  CHECK_THROWS_AS(sandwich_check(z.config, z.zeros), DomainError);
}

TEST_CASE("continuous spectrum") {
  const BandwidthC c(10.0);
  const QuadratureRule q = continuous_rule(c);
  CHECK(q.size() == 4u * kPanelPoints);
  const auto all = continuous_spectrum(c, Order(0.0), 0, q);
  double sum = 0.0;
  for (double v : all) sum += v;
  const double trace = oracle::simpson([&](double x) { return continuous_K(c, Order(0.0), x, x); }, 0.0, 1.0, 2000);
  CHECK(std::abs(sum - trace) < 1e-8);
  for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i] <= all[i - 1]);
  const auto tiny = continuous_spectrum(BandwidthC(1e-3), Order(1.0), 3, continuous_rule(BandwidthC(1e-3)));
  CHECK(tiny[0] < 1e-6);
  CHECK_THROWS_AS(continuous_spectrum(c, Order(0.0), 1000, q), DomainError);
}

TEST_CASE("sandwich reports carry both sides") {
  const Problem p = Problem::make(1.0, 0.4, 12);
  const auto reports = sandwich_check(p.config, p.zeros);
  REQUIRE(reports.size() == 12);
  for (const auto& r : reports) {
    CHECK(r.get("upper_ok") == 1.0);
    CHECK(r.get("c1_squared") > 0.0);
    CHECK(r.get("c2_squared") > 0.0);
    CHECK(r.satisfied == (r.get("lower_ok") == 1.0 && r.get("upper_ok") == 1.0));
    CHECK(r.satisfied == (r.margin >= -r.tolerance));
  }
}

TEST_CASE("kernel residual") {
  const Problem p = Problem::make(0.0, 0.5, 10);
  CHECK(kernel_residual_at(p.config, p.zeros, 0.0, 0.0) == doctest::Approx(0.0).scale(1.0));
  CHECK(kernel_residual_at(p.config, p.zeros, 0.1, 0.4) ==
        doctest::Approx(kernel_residual_at(p.config, p.zeros, 0.4, 0.1)).epsilon(1e-12));
  double prev = INFINITY;
  for (int n : {10, 20, 40}) {
    const Problem q = Problem::make(0.0, 0.5, n);
    const KernelResidual r = kernel_residual(q.config, q.zeros, 50);
    CHECK(r.max_residual <= 0.75 * prev);
    CHECK(r.rms_residual <= r.max_residual);
    prev = r.max_residual;
  }
}

TEST_CASE("l2 distance") {
  const Problem p = Problem::make(0.0, 0.5, 20);
  const BoundReport r = l2_spectral_distance(p.config, p.zeros);
  CHECK(r.bound == doctest::Approx(2.0 / kPi * std::sqrt(std::log(1.0 / 0.75))).epsilon(1e-14));
  CHECK(r.satisfied);
  CHECK(r.asserted);
  const Problem small = Problem::make(0.0, 0.01, 5);
  CHECK(l2_spectral_distance(small.config, small.zeros).computed < 1e-6);
  const Problem wide = Problem::make(0.0, 0.95, 5);
  CHECK_FALSE(l2_spectral_distance(wide.config, wide.zeros).asserted);
}

TEST_CASE("trace lemma") {
  const Problem p = Problem::make(0.0, 0.5, 40);
  const BoundReport r = trace_check(p.config, p.zeros);
  CHECK(r.get("estimate") == doctest::Approx(20.125).epsilon(1e-14));
  CHECK(r.satisfied);
  CHECK(std::abs(r.get("eigen_sum_minus_trace")) < 1e-10);
  const Problem full = Problem::make(1.0, 1.0, 7);
  const BoundReport f = trace_check(full.config, full.zeros);
  CHECK(f.get("trace") == doctest::Approx(7.0).epsilon(1e-12));
  CHECK(f.computed == doctest::Approx(0.25).epsilon(1e-10));
  CHECK_FALSE(f.asserted);
}

TEST_CASE("plunge region") {
  const Problem p = Problem::make(0.0, 0.5, 20);
  const Spectrum s = compute_spectrum(p.config, p.zeros, Method::gram_closed_form);
  CHECK_THROWS_AS(plunge_count(s, 0.6), DomainError);
  CHECK_THROWS_AS(plunge_count(s, 0.0), DomainError);
  CHECK(plunge_count(s, 0.01) >= plunge_count(s, 0.1));
  const Problem full = Problem::make(0.0, 1.0, 10);
  CHECK(plunge_count(compute_spectrum(full.config, full.zeros, Method::gram_closed_form), 0.01) == 0);
  CHECK_THROWS_AS(plunge_bound(full.config, 0.01), DomainError);

  CHECK(plunge_G(1e-6) > 0.0);
  CHECK(plunge_G(1e-6) < 1e-5);
  const double w = 0.5;
  const double g = 1.0 * std::log(3.0) + std::log(4.0 * 0.75 / 3.75 * std::sqrt(1.5 / 2.5)) +
                   2.0 * (0.5 * 2.5 / 0.75) * std::log(1.25);
  CHECK(plunge_G(w) == doctest::Approx(g).epsilon(1e-14));

  double prev = 0.0;
  for (int n : {20, 40, 80}) {
    const Problem q = Problem::make(0.0, 0.5, n);
    const double b = plunge_bound(q.config, 0.01);
    CHECK(b > prev);
    prev = b;
  }
  const PlungeFit fit = plunge_fit(0.0, 0.5, 0.01, {20, 40, 80, 160});
  CHECK(fit.max_relative_deviation <= 0.5);
  CHECK(fit.counts[2] <= 3 * fit.counts[0]);
  for (std::size_t i = 1; i < fit.counts.size(); ++i) CHECK(fit.counts[i] - fit.counts[i - 1] <= 2);
}

}  // TEST_SUITE
