#include "hepta/golden.hpp"

#include <stdexcept>

namespace hepta {
namespace golden {

namespace {
CycNum xi(int k, long e) { return CycNum::omegaPow(long(k) * e); }
RhoNum mu(int k, long l = 1) { return RhoNum::rhoConjugate(kClassOf(int(l) * k)); }
}  // namespace

MatC block1(int k) {
  MatC m(1, 1);
  m(0, 0) = CycNum(-2) + xi(k, 1) + xi(k, -1);
  return m;
}

MatC block2(int k) {
  MatC m(3, 3);
  m << CycNum(-2),            CycNum(1) + xi(k, 1),  CycNum(0),
       CycNum(1) + xi(k, -1), CycNum(-4),            CycNum(1) + xi(k, 1),
       CycNum(0),             CycNum(1) + xi(k, -1), CycNum(-4) + xi(k, 3) + xi(k, -3);
  return m;
}

MatC block3(int k) {
  MatC m(5, 5);
  m << CycNum(-2), CycNum(1),   CycNum(0),              xi(k, -1),  CycNum(0),
       CycNum(1),  CycNum(-4),  CycNum(1),              xi(k, -2),  xi(k, 1),
       CycNum(0),  CycNum(1),   CycNum(-4),             CycNum(1),  CycNum(1) + xi(k, 3),
       xi(k, 1),   xi(k, 2),    CycNum(1),              CycNum(-4), xi(k, 2),
       CycNum(0),  xi(k, -1),   CycNum(1) + xi(k, -3),  xi(k, -2),  CycNum(-6) + xi(k, 2) + xi(k, -2);
  return m;
}

MatC s11(int k) {
  MatC m(3, 1);
  m << CycNum(1) + xi(k, -1), CycNum(1) + xi(k, -2), CycNum(1) + xi(k, -3);
  return m;
}

MatC s21(int k) {
  MatC m(5, 3);
  m << CycNum(1) + xi(k, -1), CycNum(1),             CycNum(0),
       CycNum(1),             xi(k, -1),             CycNum(1),
       CycNum(1),             CycNum(0),             xi(k, 3) + xi(k, -1),
       CycNum(1),             xi(k, 2),              xi(k, 2),
       CycNum(0),             CycNum(1) + xi(k, -2), xi(k, 3);
  return m;
}

MatR qubit2(int k) {
  RhoNum m1 = mu(k), m4 = mu(k, 4);
  MatR m(2, 2);
  m << -m1 - RhoNum(4), RhoNum(2) - m1,
       RhoNum(2) + m1,  m4 - RhoNum(4);
  return m;
}

MatR qubit3(int k) {
  RhoNum m2 = mu(k, 2), m4 = mu(k, 4);
  MatR m(2, 2);
  m << RhoNum(-3) - m4 - RhoNum(4), RhoNum(-1) + m2 - RhoNum(2) * m4,
       RhoNum(1) + m2,              RhoNum(1) + m2 - RhoNum(4);
  return m;
}

RhoNum shiftedTrace(int rPrime, int k) {
  RhoNum m1 = mu(k);
  if (rPrime == 2) return RhoNum(1) - RhoNum(2) * m1 - m1 * m1;
  if (rPrime == 3) return RhoNum(-5) + m1 + RhoNum(2) * m1 * m1;
  throw std::domain_error("r' must be 2 or 3");
}

RhoNum shiftedDet(int rPrime, int k) {
  RhoNum m1 = mu(k);
  if (rPrime == 2) return RhoNum(-3) + m1 + m1 * m1;
  if (rPrime == 3) return m1 - RhoNum(2) * m1 * m1;
  throw std::domain_error("r' must be 2 or 3");
}

RhoNum discriminant2(int kClass) {
  RhoNum r = RhoNum::rho();
  switch (kClass) {
    case 1: return RhoNum(16) - r - RhoNum(3) * r * r;
    case 2: return RhoNum(9) + RhoNum(3) * r + RhoNum(2) * r * r;
    case 4: return RhoNum(9) - RhoNum(2) * r + r * r;
    default: throw std::domain_error("k-class must be 1, 2 or 4");
  }
}

RhoNum discriminant3(int kClass) {
  RhoNum r = RhoNum::rho();
  switch (kClass) {
    case 1: return RhoNum(25) - RhoNum(10) * r - RhoNum(3) * r * r;
    case 2: return RhoNum(36) + RhoNum(3) * r - RhoNum(7) * r * r;
    case 4: return RhoNum(9) + RhoNum(7) * r + RhoNum(10) * r * r;
    default: throw std::domain_error("k-class must be 1, 2 or 4");
  }
}

}  // namespace golden
}  // namespace hepta
