#include <doctest.h>

#include <random>

#include "hepta/number_theory.hpp"

using namespace hepta;

TEST_CASE("valuations at the designated primes") {
  RhoNum d21 = discriminantRho(DiscTag(2, 1));
  CHECK(valuationAt(d21, d21) == 1);
  CHECK(valuationAt(d21 * d21, d21) == 2);

  // consistent with the three-magnon factorization: tau(3+rho) divides
  // Delta_3^1 exactly once and Delta_2^1 not at all
  RhoNum p31 = designatedPrime(DiscTag(3, 1));
  CHECK(p31 == applyAut(CycAut(2), RhoNum(3) + RhoNum::rho()));
  CHECK(valuationAt(discriminantRho(DiscTag(3, 1)), p31) == 1);
  CHECK(valuationAt(d21, p31) == 0);

  CHECK_THROWS_AS(valuationAt(RhoNum(0), d21), std::domain_error);
  CHECK_THROWS_AS(valuationAt(RhoNum(ratOf(1, 2)), d21), std::domain_error);
}

TEST_CASE("designated primes have prime rational norm") {
  for (DiscTag tag : allDiscTags()) {
    Rat n = normToQ(designatedPrime(tag));
    CHECK(isInteger(n));
    CHECK(isPrimeWord(n.get_num().get_ui()));
    CHECK(n == (tag.rPrime == 2 ? 1289 : 13));
  }
}

TEST_CASE("rational reconstruction from doubles") {
  auto r = reconstructRational(0.333333333333333, 1000000);
  REQUIRE(r.has_value());
  CHECK(*r == ratOf(1, 3));
  r = reconstructRational(-2.75, 100);
  REQUIRE(r.has_value());
  CHECK(*r == ratOf(-11, 4));
  r = reconstructRational(141.0, 10);
  REQUIRE(r.has_value());
  CHECK(*r == ratOf(141));
}

TEST_CASE("square detection and certificates") {
  auto sq = sqrtInRho(RhoNum::rho() * RhoNum::rho());
  REQUIRE(sq.status == SqrtInRhoResult::Status::Square);
  CHECK((sq.root == RhoNum::rho() || sq.root == -RhoNum::rho()));

  // nonsquare via the norm: N(Delta_2^1) = 1289 is prime
  auto d = sqrtInRho(discriminantRho(DiscTag(2, 1)));
  REQUIRE(d.status == SqrtInRhoResult::Status::Nonsquare);
  REQUIRE(d.certificate.has_value());
  CHECK(d.certificate->kind == NonsquareCertificate::Kind::NormNotSquare);
  CHECK(d.certificate->norm == 1289);

  // nonsquare via an odd valuation: the norm 1289^2 is a perfect square,
  // so only the valuation path can conclude
  auto mixed = sqrtInRho(discriminantRho(DiscTag(2, 1)) * discriminantRho(DiscTag(2, 2)));
  REQUIRE(mixed.status == SqrtInRhoResult::Status::Nonsquare);
  REQUIRE(mixed.certificate.has_value());
  CHECK(mixed.certificate->kind == NonsquareCertificate::Kind::OddValuation);
  CHECK(mixed.certificate->valuation % 2 == 1);

  CHECK_THROWS_AS(sqrtInRho(RhoNum(0)), std::domain_error);
}

TEST_CASE("square roots recovered for random squares, including rationals") {
  std::mt19937 gen(777u);
  std::uniform_int_distribution<long> d(-9, 9);
  int found = 0;
  for (int i = 0; i < 200; ++i) {
    RhoNum y(Rat(d(gen)), Rat(d(gen)), ratOf(d(gen), 2));
    if (y.isZero()) continue;
    auto r = sqrtInRho(y * y);
    REQUIRE(r.status == SqrtInRhoResult::Status::Square);
    CHECK((r.root == y || r.root == -y));
    ++found;
  }
  CHECK(found > 150);
}

TEST_CASE("63 Kummer certificates with odd valuations") {
  auto certs = kummerIndependence();
  REQUIRE(certs.size() == 63);
  for (const auto& c : certs) {
    CHECK(c.valuation % 2 == 1);
    CHECK_FALSE(c.subset.empty());
    CHECK(c.witnessTag == c.subset.front());
  }
  // singleton {Delta_2^1}: witness pi_2^1 = Delta_2^1 itself, valuation 1
  CHECK(certs[0].subset.size() == 1);
  CHECK(certs[0].subset[0] == DiscTag(2, 1));
  CHECK(certs[0].valuation == 1);
  CHECK(certs[0].witnessPrime == discriminantRho(DiscTag(2, 1)));
  // {Delta_2^1, Delta_2^2} is certified at pi_2^1 even though the norm test
  // fails (1289^2 is a square)
  for (const auto& c : certs) {
    if (c.subset == std::vector<DiscTag>{DiscTag(2, 1), DiscTag(2, 2)}) {
      CHECK(c.valuation == 1);
      CHECK(c.witnessPrime == discriminantRho(DiscTag(2, 1)));
    }
  }
}
