#include <doctest.h>

#include "hepta/galois.hpp"
#include "hepta/json_io.hpp"

using namespace hepta;

TEST_CASE("wreath multiplication laws") {
  auto group = enumerateGroup(WreathVariant::ComplexTotal);
  REQUIRE(group.size() == 384);
  WreathElement id = wreathIdentity(WreathVariant::ComplexTotal);
  for (const auto& g : group) {
    CHECK(wreathMul(g, wreathInverse(g)) == id);
    CHECK(wreathMul(wreathInverse(g), g) == id);
  }
  // cyclic parts multiply mod 7
  WreathElement a = id, b = id;
  a.l = 3;
  b.l = 5;
  CHECK(wreathMul(a, b).l == 1);  // 15 = 1 mod 7

  // sign composition shifts the left factor by the class of the right
  // cyclic part: (eps; tau_l)(eps'; tau_l') has eps''_k = eps_{k phi(l')} eps'_k
  WreathElement g = id;
  g.eps = {{{1, -1, 1}, {1, 1, -1}}};
  g.l = 2;
  WreathElement h = id;
  h.eps = {{{-1, 1, 1}, {1, -1, 1}}};
  h.l = 3;  // phi(3) = 4
  WreathElement gh = wreathMul(g, h);
  CHECK(gh.l == 6);
  // row r'=2: eps''_1 = eps_{4} eps'_1, eps''_2 = eps_{8=1} eps'_2, eps''_4 = eps_{16=2} eps'_4
  CHECK(gh.eps[0][0] == g.eps[0][2] * h.eps[0][0]);
  CHECK(gh.eps[0][1] == g.eps[0][0] * h.eps[0][1]);
  CHECK(gh.eps[0][2] == g.eps[0][1] * h.eps[0][2]);
  CHECK(gh.eps[1][0] == g.eps[1][2] * h.eps[1][0]);

  CHECK(enumerateGroup(WreathVariant::RealQubitRow).size() == 24);
  CHECK(enumerateGroup(WreathVariant::RealTotal).size() == 192);
  CHECK(enumerateGroup(WreathVariant::ComplexQubitRow).size() == 48);

  WreathElement real = wreathIdentity(WreathVariant::RealTotal);
  CHECK_THROWS_AS(wreathMul(real, id), std::domain_error);
  WreathElement bad = real;
  bad.l = 3;  // not a square mod 7
  CHECK_THROWS_AS(wreathMul(bad, real), std::domain_error);
}

TEST_CASE("action on tagged roots") {
  WreathElement g = wreathIdentity(WreathVariant::ComplexTotal);
  // l = 2, all signs +1: sqrt(Delta_2^1) -> sqrt(Delta_2^2)
  g.l = 2;
  QuadRho root21(RhoNum(0), RhoNum(1), DiscTag(2, 1));
  QuadRho mapped = actOnElement(g, root21);
  CHECK(mapped.tag().has_value());
  CHECK(*mapped.tag() == DiscTag(2, 2));
  CHECK(mapped.rootCoeff() == RhoNum(1));

  // eps_{2,1} = -1, l = 1: flips sqrt(Delta_2^1), fixes sqrt(Delta_2^2)
  WreathElement flip = wreathIdentity(WreathVariant::ComplexTotal);
  flip.eps[0][0] = -1;
  CHECK(actOnElement(flip, root21).rootCoeff() == RhoNum(-1));
  QuadRho root22(RhoNum(0), RhoNum(1), DiscTag(2, 2));
  CHECK(actOnElement(flip, root22) == root22);

  // the squared root transforms consistently: g(sqrt(D)^2) = g(D)
  QuadRho squared = root21 * root21;
  CHECK(actOnElement(g, squared).base() == applyAut(CycAut(2), discriminantRho(DiscTag(2, 1))));
  CHECK(actOnElement(g, squared).base() == discriminantRho(DiscTag(2, 2)));
}

TEST_CASE("action on the spectrum") {
  auto records = fullSpectrum();
  WreathElement id = wreathIdentity(WreathVariant::ComplexTotal);
  for (const auto& rec : records) {
    SpectrumRecord same = actOnRecord(id, rec);
    CHECK(same == rec);
  }
  // (all +1; tau_2) sends E_{2,nu}^1 to E_{2,nu}^2
  WreathElement g = id;
  g.l = 2;
  for (const auto& rec : records) {
    SpectrumRecord to = actOnRecord(g, rec);
    CHECK(to.k == brillouinRep(2 * rec.k));
    if (rec.k == 1 && rec.rPrime == 2) {
      CHECK(to.k == 2);
      CHECK(to.nu == rec.nu);
    }
    if (rec.k == 0) {
      CHECK(to.energy == rec.energy);
      CHECK(to.nu == rec.nu);
    }
  }
  // (eps_{2,1} = -1, rest +1; tau_1) swaps nu at (r' = 2, k = +-1) only
  WreathElement flip = id;
  flip.eps[0][0] = -1;
  for (const auto& rec : records) {
    SpectrumRecord to = actOnRecord(flip, rec);
    CHECK(to.k == rec.k);
    if (rec.rPrime == 2 && (rec.k == 1 || rec.k == -1))
      CHECK(*to.nu == -*rec.nu);
    else
      CHECK(to.nu == rec.nu);
  }
}

TEST_CASE("subfield lattices") {
  auto cyc = cyclotomicLattice();
  REQUIRE(cyc.size() == 4);
  CHECK(cyc[3].name == "Q(w)");
  CHECK(cyc[3].degreeOverQ == 6);

  auto real = heisenbergLattice(false);
  auto cplx = heisenbergLattice(true);
  long realTop = 0, cplxTop = 0;
  for (const auto& n : real)
    if (n.name == "H_E") realTop = n.degreeOverQ;
  for (const auto& n : cplx)
    if (n.name == "H_G") cplxTop = n.degreeOverQ;
  CHECK(realTop == 192);   // 64 * 3
  CHECK(cplxTop == 384);   // 64 * 6
}

TEST_CASE("wreath element JSON parsing") {
  WreathElement g = wreathFromJson(Json::parse(R"({"eps":[[1,-1,1],[1,1,1]],"l":2})"));
  CHECK(g.l == 2);
  CHECK(g.eps[0][1] == -1);
  CHECK_THROWS(wreathFromJson(Json::parse(R"({"eps":[[1,-1,1]],"l":2})")));
  CHECK_THROWS(wreathFromJson(Json::parse(R"({"eps":[[1,-1,1],[1,1,2]],"l":2})")));
  CHECK_THROWS(wreathFromJson(Json::parse(R"({"eps":[[1,-1,1],[1,1,1]],"l":7})")));
}
