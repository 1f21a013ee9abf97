#include <doctest.h>

#include <random>

#include "hepta/numeric.hpp"
#include "hepta/quadratic.hpp"

using namespace hepta;

TEST_CASE("tagged arithmetic and the conjugate identity") {
  DiscTag tag(2, 1);
  RhoNum delta = discriminantRho(tag);
  QuadRho x(RhoNum(1, 2, 0), RhoNum(0, 1, 1), tag);
  QuadRho y(RhoNum(3), RhoNum(0, 0, 2), tag);

  // (a + b sqrt(D)) (a - b sqrt(D)) = a^2 - D b^2
  QuadRho prod = x * x.quadConj();
  CHECK_FALSE(prod.hasRoot());
  CHECK(prod.base() == RhoNum(1, 2, 0) * RhoNum(1, 2, 0) - delta * RhoNum(0, 1, 1) * RhoNum(0, 1, 1));

  CHECK((x + y) - y == x);
  CHECK(x * y == y * x);
  if (!x.isZero()) CHECK(x * x.inverse() == QuadRho(1));
  CHECK_THROWS_AS(QuadRho(0).inverse(), std::domain_error);
}

TEST_CASE("field axioms in the quadratic extensions") {
  std::mt19937 gen(4242u);
  std::uniform_int_distribution<long> d(-6, 6);
  auto rr = [&] { return RhoNum(Rat(d(gen)), ratOf(d(gen), 2), Rat(d(gen))); };
  for (int i = 0; i < 60; ++i) {
    DiscTag tag = allDiscTags()[size_t(i % 6)];
    QuadRho x(rr(), rr(), tag), y(rr(), rr(), tag), z(rr(), rr(), tag);
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    if (!x.isZero()) CHECK(x * x.inverse() == QuadRho(1));
    QuadCyc cx = toCyc(x), cy = toCyc(y);
    CHECK(cx * cy == toCyc(x * y));
    CHECK(conjQuad(cx * cy) == conjQuad(cx) * conjQuad(cy));
  }
}

TEST_CASE("mixed tags are rejected, pure base elements mix freely") {
  QuadRho a(RhoNum(1), RhoNum(1), DiscTag(2, 1));
  QuadRho b(RhoNum(1), RhoNum(1), DiscTag(3, 4));
  CHECK_THROWS_AS(a * b, TagMismatch);
  CHECK_THROWS_AS(a + b, TagMismatch);
  QuadRho plain(RhoNum(2, 1, 0));
  CHECK((a * plain).tag() == a.tag());
  CHECK((b + plain).tag() == b.tag());
  // root parts that cancel drop the tag
  QuadRho diff = a - a + plain;
  CHECK_FALSE(diff.hasRoot());
}

TEST_CASE("numeric embeddings") {
  CHECK(numericEmbedReal(RhoNum::rho()) == doctest::Approx(1.246979603717467).epsilon(1e-12));

  // eta = i sqrt(7)
  CycNum eta = CycNum::omegaPow(1) + CycNum::omegaPow(2) + CycNum::omegaPow(4) -
               CycNum::omegaPow(-1) - CycNum::omegaPow(-2) - CycNum::omegaPow(-4);
  auto v = numericEmbed(eta);
  CHECK(v.real() == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(v.imag() == doctest::Approx(std::sqrt(7.0)).epsilon(1e-12));

  // Delta_2^1 = 16 - rho - 3 rho^2 evaluated in doubles
  double rho = numericEmbedReal(RhoNum::rho());
  double expected = 16 - rho - 3 * rho * rho;
  CHECK(numericEmbedReal(discriminantRho(DiscTag(2, 1))) ==
        doctest::Approx(expected).epsilon(1e-12));
  CHECK(expected == doctest::Approx(10.0881).epsilon(1e-4));

  // embedding a tagged element uses the principal root of the embedded
  // discriminant in the same real place
  QuadRho e(RhoNum(1), RhoNum(2), DiscTag(2, 1));
  for (int cls : {1, 2, 4}) {
    CycAut place{cls};
    double want = numericEmbedReal(RhoNum(1), place) +
                  2 * std::sqrt(numericEmbedReal(discriminantRho(DiscTag(2, 1)), place));
    CHECK(numericEmbedReal(e, place) == doctest::Approx(want).epsilon(1e-12));
  }
}

TEST_CASE("all six discriminants are totally positive") {
  for (DiscTag tag : allDiscTags())
    for (int cls : {1, 2, 4})
      CHECK(numericEmbedReal(discriminantRho(tag), CycAut(cls)) > 0);
}
