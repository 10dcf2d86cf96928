#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>

#include "dhpss/errors.hpp"
#include "dhpss/ingham.hpp"
#include "oracles.hpp"

using namespace dhpss;

namespace {
constexpr double kPi = std::numbers::pi;

double top_eigenvalue_reference(const std::vector<long>& idx, double w) {
  const auto n = static_cast<int>(idx.size());
  Eigen::MatrixXd a(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double d = static_cast<double>(idx[i] - idx[j]);
      a(i, j) = i == j ? 2.0 * w : std::sin(2.0 * kPi * d * w) / (kPi * d);
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);
  return es.eigenvalues()(n - 1);
}
}  // namespace

TEST_SUITE("ingham") {

TEST_CASE("config validation") {
  CHECK_THROWS_WITH(InghamConfig(0.5, {1, 2}), "T must be > 1");
  CHECK_THROWS_AS(InghamConfig(1.0, {1}), DomainError);
  CHECK_THROWS_AS(InghamConfig(2.0, {2, 2}), DomainError);
  CHECK_THROWS_AS(InghamConfig(2.0, {0, 1}), DomainError);
  CHECK_THROWS_AS(InghamConfig(2.0, {}), DomainError);
  const InghamConfig c(2.5, {1, 3});
  CHECK(c.n_of_T() == 3);
  CHECK(c.omega() == doctest::Approx(2.5 / 6.0).epsilon(1e-15));
  CHECK(c.scaled_indices() == std::vector<long>{3, 9});
}

TEST_CASE("sinc Gram matrix") {
  const Matrix g = sinc_gram({1, 2, 5, 9}, 0.2);
  for (int i = 0; i < 4; ++i) CHECK(g(i, i) == doctest::Approx(0.4).epsilon(1e-15));
  CHECK(sinc_gram({7}, 0.3)(0, 0) == doctest::Approx(0.6).epsilon(1e-15));
  CHECK_THROWS_AS(sinc_gram({1, 2}, 0.5), DomainError);
  CHECK_THROWS_AS(sinc_gram({2, 1}, 0.2), DomainError);

  // int_{-w}^{w} e^{2 pi i (n - m) t} dt, real part only (the rest cancels)
  const double w = 0.25;
  const Matrix c = sinc_gram({1, 2, 3, 4, 5, 6}, w);
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) {
      const double ref = oracle::simpson([&](double t) { return std::cos(2.0 * kPi * (i - j) * t); }, -w, w, 20000);
      CHECK(std::abs(c(i, j) - ref) < 1e-10);
    }
  }
}

TEST_CASE("sinc Gram matrices are positive semidefinite") {
  for (const auto& idx : {std::vector<long>{1, 2, 3, 4, 5, 6, 7, 8}, std::vector<long>{2, 3, 7, 11, 40},
                          std::vector<long>{1, 100}}) {
    for (double w : {0.05, 0.2, 0.45}) {
      const EigenSystem es = eigensystem(sinc_gram(idx, w));
      CHECK(es.values.back() >= -1e-10);
    }
  }
}

TEST_CASE("restricted eigenvalue") {
  CHECK(ingham_eigenvalue(InghamConfig(1.5, {1})) == doctest::Approx(1.5 / 2.0).epsilon(1e-15));
  const double ref = top_eigenvalue_reference({2, 4, 6}, 1.5 / 4.0);
  CHECK(ingham_eigenvalue(InghamConfig(1.5, {1, 2, 3})) == doctest::Approx(ref).epsilon(1e-13));
  for (double t : {1.2, 3.7, 9.9}) {
    for (long scale : {1, 3}) {
      std::vector<long> f = {1, 2, 4, 7};
      for (long& v : f) v *= scale;
      const double lam = ingham_eigenvalue(InghamConfig(t, f));
      CHECK(lam > 0.0);
      CHECK(lam < 1.0);
    }
  }
}

TEST_CASE("closed-form bound") {
  const double target = 2.0 / (std::numbers::e * std::numbers::e);
  CHECK(std::abs(ingham_upper_closed(10.0) / target - 1.0) < 0.10);
  CHECK(std::abs(ingham_upper_closed(100.0) / target - 1.0) < 0.01);
  CHECK(std::abs(ingham_upper_closed(1000.0) / target - 1.0) < 0.001);
  for (double t : {10.5, 100.5, 1000.5, 10000.5}) CHECK(ingham_upper_closed(t) > 0.0);
  CHECK(std::abs(ingham_upper_closed(100000.5) / target - 1.0) < 1e-4);

  const double r = 0.75;
  const double q = (1.0 - r * r) / std::cos(kPi * r / 2.0);
  CHECK(ingham_A_T(1.5) == doctest::Approx(kPi * kPi / 8.0 * q * q).epsilon(1e-15));
  CHECK(ingham_upper_closed(1.5) ==
        doctest::Approx(kPi * kPi / (8.0 * std::exp(2.0)) * (2.0 / 1.5) * q * q).epsilon(1e-14));
  CHECK_THROWS_AS(ingham_upper_closed(1.0), DomainError);
}

TEST_CASE("classical envelope") {
  CHECK(classical_A(1e-9) == doctest::Approx(kPi * kPi / 8.0).epsilon(1e-12));
  const long n_size = 32;
  const double w = 0.125;
  const ClassicalEnvelope first = classical_decay_envelope(n_size, w, 0);
  CHECK(first.window_begin == doctest::Approx(std::numbers::e * kPi / 2.0 * 32 * 0.125).epsilon(1e-15));
  CHECK(first.window_end == 31);

  std::vector<long> all(n_size);
  for (long i = 0; i < n_size; ++i) all[i] = i + 1;
  const EigenSystem es = eigensystem(sinc_gram(all, w));
  double prev = INFINITY;
  int in_window = 0;
  for (long n = 0; n < n_size; ++n) {
    const ClassicalEnvelope env = classical_decay_envelope(n_size, w, n);
    if (!env.in_window) continue;
    ++in_window;
    CHECK(env.value > 0.0);
    CHECK(env.value < prev);
    prev = env.value;
    CHECK(es.values[n] <= env.value);
  }
  CHECK(in_window > 0);
}

TEST_CASE("asymptotic constants are formulas") {
  CHECK(asymptotic_upper_constant() == 2.0 / (std::numbers::e * std::numbers::e));
  CHECK(asymptotic_lower_constant() == std::numbers::pi * std::numbers::pi / 64.0);
}

TEST_CASE("chain at a few windows") {
  for (double t : {1.5, 2.5, 5.5}) {
    const long count = 3;
    const InghamResult r = ingham(InghamConfig::consecutive(t, count));
    CHECK(r.upper_bound > 0.0);
    CHECK(r.best_le_upper);
    CHECK(r.upper_bound == doctest::Approx(r.n_of_T / t * r.eigenvalue_used).epsilon(1e-15));
    CHECK(r.full_problem_size == r.n_of_T * count);
    CHECK(std::isfinite(r.full_problem_eigenvalue));
    CHECK(r.closed_form == doctest::Approx(ingham_upper_closed(t)).epsilon(1e-15));
  }
  const InghamResult big = ingham(InghamConfig::consecutive(1000.0, 4));
  CHECK(std::isnan(big.full_problem_eigenvalue));
}

}  // TEST_SUITE
