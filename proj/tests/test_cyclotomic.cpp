#include <doctest.h>

#include <random>
#include <vector>

#include "hepta/cyclotomic.hpp"

using namespace hepta;

namespace {

std::mt19937 gen(12345u);

Rat rq(long span = 12) {
  std::uniform_int_distribution<long> num(-span, span);
  std::uniform_int_distribution<long> den(1, 5);
  return ratOf(num(gen), den(gen));
}

CycNum randomCyc() {
  std::array<Rat, 6> c;
  for (auto& q : c) q = rq();
  return CycNum(c);
}

RhoNum randomRho() { return RhoNum(rq(), rq(), rq()); }

// Extended Euclid in Q[x] for the inverse oracle: returns u with
// u * a = gcd (mod m), as dense coefficient vectors.
using Poly = std::vector<Rat>;

Poly trim(Poly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

Poly polyMul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return trim(c);
}

Poly polySub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rat(0));
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  return trim(a);
}

// division with remainder: a = q*b + r
std::pair<Poly, Poly> polyDivMod(Poly a, const Poly& b) {
  Poly q;
  while (a.size() >= b.size() && !a.empty()) {
    Rat f = a.back() / b.back();
    size_t shift = a.size() - b.size();
    Poly t(shift + 1, Rat(0));
    t[shift] = f;
    if (q.size() < t.size()) q.resize(t.size(), Rat(0));
    q[shift] += f;
    a = polySub(a, polyMul(t, b));
  }
  return {trim(q), a};
}

// inverse of a modulo m (gcd must be a nonzero constant)
Poly polyInverseMod(const Poly& a, const Poly& m) {
  Poly r0 = m, r1 = a, s0 = {}, s1 = {Rat(1)};
  while (!r1.empty()) {
    auto [q, r] = polyDivMod(r0, r1);
    Poly s = polySub(s0, polyMul(q, s1));
    r0 = r1; r1 = r;
    s0 = s1; s1 = s;
  }
  REQUIRE(r0.size() == 1);  // gcd is a unit
  Poly inv = s0;
  for (auto& c : inv) c /= r0[0];
  auto [_, rem] = polyDivMod(inv, m);
  return rem;
}

}  // namespace

TEST_CASE("omega power identities") {
  CHECK(CycNum::omega() * CycNum::omegaPow(6) == CycNum(1));
  CycNum sum = 0;
  for (int i = 0; i <= 6; ++i) sum += CycNum::omegaPow(i);
  CHECK(sum.isZero());
  CHECK(CycNum::omegaPow(9) == CycNum::omegaPow(2));
  CHECK(CycNum::omegaPow(-1) == CycNum::omegaPow(6));
}

TEST_CASE("rho reduction follows the minimal polynomial") {
  RhoNum r = RhoNum::rho();
  CHECK(r * r * r == RhoNum(1) + RhoNum(2) * r - r * r);
  CHECK(r * r * r * r == RhoNum(-1) - r + RhoNum(3) * r * r);
}

TEST_CASE("cyclotomic inverse matches the extended-Euclid oracle") {
  // oracle: extended Euclid in Q[x] modulo x^6 + ... + 1
  Poly modulus(7, Rat(1));
  CycNum x = CycNum(1) + CycNum::omega();  // 1 + w
  Poly xv = {Rat(1), Rat(1)};
  Poly inv = polyInverseMod(xv, modulus);
  std::array<Rat, 6> coeffs{};
  for (size_t i = 0; i < inv.size(); ++i) coeffs[i] = inv[i];
  CycNum oracle(coeffs);

  CycNum computed = x.inverse();
  CHECK(computed == oracle);
  CHECK(x * computed == CycNum(1));

  for (int i = 0; i < 25; ++i) {
    CycNum y = randomCyc();
    if (y.isZero()) continue;
    CHECK(y * y.inverse() == CycNum(1));
  }
  CHECK_THROWS_AS(CycNum(0).inverse(), std::domain_error);
}

TEST_CASE("field axioms on random elements") {
  for (int i = 0; i < 50; ++i) {
    CycNum a = randomCyc(), b = randomCyc(), c = randomCyc();
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    RhoNum x = randomRho(), y = randomRho(), z = randomRho();
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    if (!x.isZero()) CHECK(x * x.inverse() == RhoNum(1));
  }
}

TEST_CASE("automorphisms act as tau_l(w^k) = w^{lk}") {
  CHECK(applyAut(CycAut(2), CycNum::omega()) == CycNum::omegaPow(2));
  CHECK(CycAut(2).compose(CycAut(4)) == CycAut(1));  // 8 = 1 mod 7
  CHECK(applyAut(CycAut(-1), RhoNum::rho()) == RhoNum::rho());
  // tau = tau_2 cycles rho -> rho_2 -> rho_4 -> rho
  RhoNum r = RhoNum::rho();
  RhoNum r2 = applyAut(CycAut(2), r);
  RhoNum r4 = applyAut(CycAut(2), r2);
  CHECK(r2 == RhoNum::rhoConjugate(2));
  CHECK(r4 == RhoNum::rhoConjugate(4));
  CHECK(applyAut(CycAut(2), r4) == r);
  for (int l = 1; l <= 6; ++l) {
    CycNum a = randomCyc(), b = randomCyc();
    CHECK(applyAut(CycAut(l), a * b) ==
          applyAut(CycAut(l), a) * applyAut(CycAut(l), b));
  }
}

TEST_CASE("embed and project are mutually inverse on the real subfield") {
  CHECK(embed(RhoNum::rho()) == CycNum::omega() + CycNum::omegaPow(6));

  // oracle: independent Gaussian elimination on the 6x4 rational system
  // [embed(1) embed(rho) embed(rho^2) | target] for target = w^2 + w^5
  CycNum target = CycNum::omegaPow(2) + CycNum::omegaPow(5);
  std::array<CycNum, 3> basis = {CycNum(1), embed(RhoNum::rho()),
                                 embed(RhoNum::rho() * RhoNum::rho())};
  std::vector<std::vector<Rat>> aug(6, std::vector<Rat>(4, Rat(0)));
  for (int row = 0; row < 6; ++row) {
    for (int col = 0; col < 3; ++col) aug[size_t(row)][size_t(col)] = basis[size_t(col)].coeff(row);
    aug[size_t(row)][3] = target.coeff(row);
  }
  int prow = 0;
  std::vector<int> pivotCol;
  for (int col = 0; col < 3 && prow < 6; ++col) {
    int p = -1;
    for (int i = prow; i < 6; ++i)
      if (aug[size_t(i)][size_t(col)] != 0) { p = i; break; }
    if (p < 0) continue;
    std::swap(aug[size_t(p)], aug[size_t(prow)]);
    Rat inv = Rat(1) / aug[size_t(prow)][size_t(col)];
    for (auto& v : aug[size_t(prow)]) v *= inv;
    for (int i = 0; i < 6; ++i) {
      if (i == prow || aug[size_t(i)][size_t(col)] == 0) continue;
      Rat f = aug[size_t(i)][size_t(col)];
      for (int j = 0; j < 4; ++j) aug[size_t(i)][size_t(j)] -= f * aug[size_t(prow)][size_t(j)];
    }
    pivotCol.push_back(col);
    ++prow;
  }
  REQUIRE(pivotCol.size() == 3);
  for (int i = 3; i < 6; ++i) CHECK(aug[size_t(i)][3] == 0);  // consistent
  RhoNum oracle(aug[0][3], aug[1][3], aug[2][3]);
  CHECK(oracle == RhoNum(-2, 0, 1));  // rho_2 = -2 + rho^2

  auto projected = project(target);
  REQUIRE(projected.has_value());
  CHECK(*projected == oracle);
  CHECK(embed(*projected) == target);

  CHECK_FALSE(project(CycNum::omega()).has_value());

  for (int i = 0; i < 40; ++i) {
    RhoNum x = randomRho();
    auto back = project(embed(x));
    REQUIRE(back.has_value());
    CHECK(*back == x);
  }

  // conjugation fixes exactly the image of embed: an element projects iff
  // it is fixed, and symmetrizing any element lands in the image
  for (int i = 0; i < 40; ++i) {
    CycNum y = randomCyc();
    bool fixed = applyAut(CycAut(-1), y) == y;
    CHECK(project(y).has_value() == fixed);
    CycNum sym = y + applyAut(CycAut(-1), y);
    auto p = project(sym);
    REQUIRE(p.has_value());
    CHECK(embed(*p) == sym);
  }
}

TEST_CASE("trace and norm of the real subfield") {
  RhoNum r = RhoNum::rho();
  CHECK(traceToQ(r) == -1);
  CHECK(traceToQ(r * r) == 5);  // rho^2 = rho_2 + 2
  CHECK(normToQ(r) == 1);
  CHECK(normToQ(RhoNum(5) + r) == 91);
  CHECK(normToQ(RhoNum(5) - RhoNum(3) * r) == 83);
  CHECK(normToQ(RhoNum(3) + r) == 13);
  CHECK(normToQ(RhoNum(2) - r) == 7);
  for (int i = 0; i < 100; ++i) {
    RhoNum x = randomRho(), y = randomRho();
    CHECK(normToQ(x * y) == normToQ(x) * normToQ(y));
  }
}
