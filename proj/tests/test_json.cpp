#include <doctest.h>

#include "hepta/json_io.hpp"

using namespace hepta;

TEST_CASE("field element schema round trips") {
  Rat q = ratOf(-22, 7);
  CHECK(ratFromJson(toJson(q)) == q);
  CHECK(toJson(q)["coeffs"][0] == "-22/7");

  RhoNum r(ratOf(1, 2), ratOf(-3), ratOf(0));
  CHECK(rhoFromJson(toJson(r)) == r);
  CHECK(toJson(r)["field"] == "Q(rho)");

  CycNum c = CycNum::omegaPow(6) * CycNum(ratOf(2, 3));
  CHECK(cycFromJson(toJson(c)) == c);
  CHECK(toJson(c)["coeffs"].size() == 6);

  QuadRho e(RhoNum(1, 2, 3), RhoNum(ratOf(-1, 2)), DiscTag(3, 2));
  Json j = toJson(e);
  CHECK(j["field"] == "quad");
  CHECK(j["coeffs"].size() == 6);
  CHECK(j["tag"]["rp"] == 3);
  CHECK(quadRhoFromJson(j) == e);

  QuadCyc qc(CycNum::omega(), CycNum(1) + CycNum::omega(), DiscTag(2, 4));
  CHECK(quadCycFromJson(toJson(qc)) == qc);
  CHECK(toJson(qc)["coeffs"].size() == 12);

  // pure-base quad keeps no tag
  QuadRho plain(RhoNum(5));
  CHECK_FALSE(toJson(plain).contains("tag"));
  CHECK(quadRhoFromJson(toJson(plain)) == plain);
}

TEST_CASE("rational string form is canonical") {
  CHECK(ratToString(ratOf(4, 6)) == "2/3");
  CHECK(ratToString(ratOf(-4, 6)) == "-2/3");
  CHECK(ratFromString("10/4") == ratOf(5, 2));
  CHECK(ratFromString("7") == ratOf(7));
  CHECK_THROWS(ratFromString("1/0"));
  CHECK_THROWS(ratFromString("x"));
}

TEST_CASE("labeled matrix export") {
  auto orbits = orbitsAtMomentum(2, 1);
  Json j = matrixToJson(fourierBlock(2, 1), orbits, orbits);
  CHECK(j["rows"].size() == 3);
  CHECK(j["rows"][0] == Json::array({1, 6}));
  CHECK(j["entries"].size() == 3);
  CHECK(j["entries"][0].size() == 3);
  CHECK(j["entries"][0][0]["field"] == "Q(w7)");
}
