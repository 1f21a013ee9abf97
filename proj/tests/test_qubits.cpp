#include <doctest.h>

#include "hepta/golden.hpp"
#include "hepta/numeric.hpp"
#include "hepta/qubits.hpp"

using namespace hepta;

namespace {
CycNum xiPow(int k, long e) { return CycNum::omegaPow(long(k) * e); }
}

TEST_CASE("two-magnon qubit bases") {
  for (int k : {-3, -2, -1, 1, 2, 3}) {
    MatC b = highestWeightMatrix(2, k);
    CHECK(b(0, 0) == CycNum(1) + xiPow(k, 2));
    CHECK(b(1, 0) == -(CycNum(1) + xiPow(k, 1)));
    CHECK(b(2, 0).isZero());
    // the second vector is (1 + xi^3)/(1 + xi) scaled: (1 - xi + xi^2, 0, -1)
    CHECK(b(0, 1) * (CycNum(1) + xiPow(k, 1)) == CycNum(1) + xiPow(k, 3));
    // both annihilated by S^+
    MatC sPlus = dagger<CycNum>(sBlock(1, 1, k));
    CHECK(isZeroMat<CycNum>(MatC(sPlus * b)));
    // generic kernel spans the same plane
    MatC kernel = highestWeightKernel(2, k);
    MatC joint(3, 4);
    joint.leftCols(2) = kernel;
    joint.rightCols(2) = b;
    CHECK(rankOf<CycNum>(joint) == 2);
  }
  MatC b0 = highestWeightMatrix(2, 0);
  VecC v1 = b0.col(0), v2 = b0.col(1);
  MatC h = fourierBlock(2, 0);
  CHECK(sameMat<CycNum>(MatC(h * v1), MatC(v1 * CycNum(-2))));
  CHECK(sameMat<CycNum>(MatC(h * v2), MatC(v2 * CycNum(-6))));
}

TEST_CASE("three-magnon qubit bases are highest weight") {
  for (int k = -3; k <= 3; ++k) {
    MatC b = highestWeightMatrix(3, k);
    MatC sPlus = dagger<CycNum>(sBlock(2, 1, k));
    CHECK(isZeroMat<CycNum>(MatC(sPlus * b)));
    CHECK(rankOf<CycNum>(b) == 2);
  }
  // k = 0: doubly degenerate eigenvectors at E = -5
  MatC b0 = highestWeightMatrix(3, 0);
  MatC h = fourierBlock(3, 0);
  CHECK(sameMat<CycNum>(MatC(h * b0), MatC(b0 * CycNum(-5))));
}

TEST_CASE("qubit Hamiltonians match the closed forms and the re-derivation") {
  for (int k : {-3, -2, -1, 1, 2, 3}) {
    MatR q2 = qubitHamiltonian(2, k);
    CHECK(sameMat<RhoNum>(q2, golden::qubit2(k)));
    MatR q3 = qubitHamiltonian(3, k);
    CHECK(sameMat<RhoNum>(q3, golden::qubit3(k)));
    // re-derivation: H B = B M entrywise over Q(w)
    MatC b = highestWeightMatrix(2, k);
    MatC m(2, 2);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) m(i, j) = embed(q2(i, j));
    CHECK(sameMat<CycNum>(MatC(fourierBlock(2, k) * b), MatC(b * m)));
  }
  CHECK_THROWS_AS(qubitHamiltonian(2, 0), std::domain_error);
}

TEST_CASE("characteristic polynomials and discriminants") {
  for (int k : {-3, -2, -1, 1, 2, 3}) {
    for (int rp : {2, 3}) {
      ShiftedCharPoly cp = charpolyDisc(rp, k);
      CHECK(cp.trace == golden::shiftedTrace(rp, k));
      CHECK(cp.det == golden::shiftedDet(rp, k));
      CHECK(cp.disc == discriminantRho(DiscTag(rp, kClassOf(k))));
      // 2x2 identity: disc = trace^2 - 4 det
      CHECK(cp.disc == cp.trace * cp.trace - RhoNum(4) * cp.det);
    }
  }
  CHECK(discriminantRho(DiscTag(2, 1)) == RhoNum(16, -1, -3));
  CHECK(discriminantRho(DiscTag(3, 4)) == RhoNum(9, 7, 10));
}

TEST_CASE("exact energies") {
  auto [e2p, e2m] = energiesAt(2, 0);
  CHECK(e2p == QuadRho(-2));
  CHECK(e2m == QuadRho(-6));
  auto [e3p, e3m] = energiesAt(3, 0);
  CHECK(e3p == QuadRho(-5));
  CHECK(e3m == QuadRho(-5));
  auto [e0, e0b] = energiesAt(0, 0);
  CHECK(e0 == QuadRho(0));
  CHECK(e0b == e0);

  for (int k : {-3, -2, -1, 1, 2, 3}) {
    auto [ep, em] = energiesAt(2, k);
    ShiftedCharPoly cp = charpolyDisc(2, k);
    for (const QuadRho& e : {ep, em}) {
      QuadRho x = e + QuadRho(4);
      CHECK((x * x - QuadRho(cp.trace) * x + QuadRho(cp.det)).isZero());
    }
    // numerically: +1 root above -1 root in the defining embedding
    CHECK(numericEmbedReal(ep) > numericEmbedReal(em));
  }
}

TEST_CASE("projectors from the Gram construction") {
  for (int k : {-3, -2, -1, 1, 2, 3}) {
    MatC s11 = sBlock(1, 1, k);
    MatC p21 = projectorBlock(2, 1, k);
    CHECK(sameMat<CycNum>(p21, MatC(s11 * dagger<CycNum>(s11) * CycNum(ratOf(1, 5)))));
    MatC s12 = sBlock(1, 2, k);
    MatC p31 = projectorBlock(3, 1, k);
    CHECK(sameMat<CycNum>(p31, MatC(s12 * dagger<CycNum>(s12) * CycNum(ratOf(1, 40)))));
    for (auto [r, rp] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {3, 1}, {3, 2}, {3, 3}}) {
      MatC p = projectorBlock(r, rp, k);
      CHECK(sameMat<CycNum>(MatC(p * p), p));
      CHECK(sameMat<CycNum>(dagger<CycNum>(p), p));
      CHECK(traceOf<CycNum>(p) == CycNum(rp >= 2 ? 2 : 1));
    }
  }
}

TEST_CASE("density matrices are exact eigenprojectors") {
  for (int k : {-2, 0, 3}) {
    for (auto [r, rp] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {3, 3}}) {
      DensityPair dp = densityMatrices(r, rp, k);
      MatQuadC h = toQuadC(fourierBlock(r, k));
      auto [ePlus, eMinus] = energiesAt(rp, k);
      CHECK(sameMat<QuadCyc>(MatQuadC(dp.plus * dp.plus), dp.plus));
      CHECK(traceOf<QuadCyc>(dp.plus) == QuadCyc(1));
      CHECK(sameMat<QuadCyc>(MatQuadC(h * dp.plus), MatQuadC(dp.plus * QuadCyc(toCyc(ePlus)))));
      CHECK(sameMat<QuadCyc>(MatQuadC(h * dp.minus), MatQuadC(dp.minus * QuadCyc(toCyc(eMinus)))));
      CHECK(sameMat<QuadCyc>(MatQuadC(dp.plus + dp.minus), toQuadC(projectorBlock(r, rp, k))));
    }
  }
  // k = 0, r' = 3: the state built on (0,1,0,-1,0) has trace one
  DensityPair dp = densityMatrices(3, 3, 0);
  CHECK(traceOf<QuadCyc>(dp.minus) == QuadCyc(1));
}
