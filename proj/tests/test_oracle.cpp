#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hepta/oracle.hpp"

using namespace hepta;

TEST_CASE("jacobi on small matrices") {
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(3, 3);
  d(0, 0) = 1;
  d(1, 1) = 2;
  d(2, 2) = 3;
  auto ev = jacobiEigenvalues(DenseSym(d));
  REQUIRE(ev.size() == 3);
  CHECK(ev[0] == doctest::Approx(1.0));
  CHECK(ev[1] == doctest::Approx(2.0));
  CHECK(ev[2] == doctest::Approx(3.0));

  Eigen::MatrixXd z = Eigen::MatrixXd::Zero(1, 1);
  auto single = jacobiEigenvalues(DenseSym(z));
  REQUIRE(single.size() == 1);
  CHECK(single[0] == 0.0);

  Eigen::MatrixXd m(2, 2);
  m << 0, 1, 1, 0;
  auto pm = jacobiEigenvalues(DenseSym(m));
  CHECK(pm[0] == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(pm[1] == doctest::Approx(1.0).epsilon(1e-12));

  Eigen::MatrixXd bad(2, 2);
  bad << 0, 1, 0, 0;
  CHECK_THROWS_AS(DenseSym{bad}, std::invalid_argument);
}

TEST_CASE("hermitian embedding doubles the spectrum") {
  Eigen::MatrixXcd h(2, 2);
  h << std::complex<double>(1, 0), std::complex<double>(0, 2),
       std::complex<double>(0, -2), std::complex<double>(-1, 0);
  // eigenvalues +-sqrt(5)
  auto ev = jacobiEigenvalues(DenseSym::embedHermitian(h));
  REQUIRE(ev.size() == 4);
  CHECK(ev[0] == doctest::Approx(-std::sqrt(5.0)).epsilon(1e-12));
  CHECK(ev[1] == doctest::Approx(-std::sqrt(5.0)).epsilon(1e-12));
  CHECK(ev[3] == doctest::Approx(std::sqrt(5.0)).epsilon(1e-12));
}

TEST_CASE("spectrum comparison semantics") {
  std::vector<double> a = {0.0, 1.0, 1.0, 2.0};
  std::vector<double> b = {0.0, 1.0 + 2e-10, 1.0, 2.0};
  auto cmp = compareSpectra(a, b, 1e-9);
  CHECK(cmp.sizesMatch);
  CHECK(cmp.clustersMatch);
  CHECK(cmp.maxDeviation <= 1e-9);
  CHECK(cmp.pass(1e-9));

  // a genuine splitting breaks the cluster structure
  std::vector<double> c = {0.0, 1.0, 1.0001, 2.0};
  cmp = compareSpectra(a, c, 1e-9);
  CHECK_FALSE(cmp.clustersMatch);
  CHECK_FALSE(cmp.pass(1e-9));

  cmp = compareSpectra(a, std::vector<double>{0.0, 1.0}, 1e-9);
  CHECK_FALSE(cmp.sizesMatch);
}

TEST_CASE("full Hamiltonian trace") {
  Eigen::MatrixXd h = fullArithmeticHamiltonian();
  REQUIRE(h.rows() == 128);
  CHECK(h.trace() == doctest::Approx(double(arithmeticTraceByCounting())).epsilon(1e-12));
  CHECK((h - h.transpose()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("block oracle agrees with the r = 0 and r = 1 closed forms") {
  auto ev00 = blockOracleEigenvalues(0, 0);
  REQUIRE(ev00.size() == 1);
  CHECK(ev00[0] == doctest::Approx(0.0).epsilon(1e-10));

  // H_1^k = -2 + 2 cos(2 pi k / 7)
  for (int k = -3; k <= 3; ++k) {
    auto ev = blockOracleEigenvalues(1, k);
    REQUIRE(ev.size() == 1);
    CHECK(ev[0] ==
          doctest::Approx(-2 + 2 * std::cos(2 * std::numbers::pi * k / 7)).epsilon(1e-10));
  }

  CHECK(blockOracleEigenvalues(0, 2).empty());
}
