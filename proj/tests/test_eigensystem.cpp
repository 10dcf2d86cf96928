#include <doctest.h>

#include <cmath>
#include <random>

#include "dhpss/eigensystem.hpp"
#include "dhpss/errors.hpp"
#include "oracles.hpp"

using namespace dhpss;

namespace {

Matrix random_spd(int n, unsigned seed) {
  std::mt19937 gen(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Matrix b(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) b(i, j) = u(gen);
  return b * b.transpose() / n;
}

std::vector<std::vector<double>> to_rows(const Matrix& a) {
  std::vector<std::vector<double>> rows(a.rows(), std::vector<double>(a.cols()));
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) rows[i][j] = a(i, j);
  return rows;
}

}  // namespace

TEST_SUITE("eigensystem") {

TEST_CASE("2x2 closed form") {
  Matrix a(2, 2);
  a << 2.0, 1.0, 1.0, 2.0;
  const EigenSystem es = eigensystem(a);
  CHECK(es.values[0] == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(es.values[1] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::abs(std::abs(es.vectors(0, 0)) - std::sqrt(0.5)) < 1e-15);
}

TEST_CASE("both solver paths decompose random matrices") {
  for (int n : {1, 5, 64, 65, 120}) {
    const Matrix a = random_spd(n, 17u + n);
    const EigenSystem es = eigensystem(a);
    REQUIRE(es.values.size() == static_cast<std::size_t>(n));
    for (int k = 0; k + 1 < n; ++k) CHECK(es.values[k] >= es.values[k + 1]);
    const Matrix v = es.vectors;
    CHECK((v.transpose() * v - Matrix::Identity(n, n)).norm() < 1e-12 * n);
    Vector lam(n);
    for (int k = 0; k < n; ++k) lam(k) = es.values[k];
    CHECK((a * v - v * lam.asDiagonal()).norm() < 1e-12 * n);
    CHECK(es.values[0] == doctest::Approx(oracle::power_iteration(to_rows(a))).epsilon(1e-9));
  }
}

TEST_CASE("Jacobi and the library solver agree across the size switch") {
  const Matrix a = random_spd(kJacobiMaxSize, 5u);
  const EigenSystem small = eigensystem(a);
  Eigen::SelfAdjointEigenSolver<Matrix> ref(a);
  for (int k = 0; k < kJacobiMaxSize; ++k) {
    CHECK(small.values[k] == doctest::Approx(ref.eigenvalues()(kJacobiMaxSize - 1 - k)).epsilon(1e-12).scale(1.0));
  }
}

TEST_CASE("rejects bad input") {
  CHECK_THROWS_AS(eigensystem(Matrix(2, 3)), DomainError);
  Matrix a = Matrix::Identity(3, 3);
  a(0, 1) = 1e-3;
  CHECK_THROWS_AS(eigensystem(a), NumericalError);
  a(0, 1) = std::nan("");
  CHECK_THROWS_AS(eigensystem(a), NumericalError);
}

}  // TEST_SUITE
