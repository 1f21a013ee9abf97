#include "hepta/qubits.hpp"

#include <stdexcept>

namespace hepta {

namespace {

CycNum xiPow(int k, long e) { return CycNum::omegaPow(long(k) * e); }

MatC twoMagnonBasis(int k) {
  MatC b(3, 2);
  if (brillouinRep(k) == 0) {
    b << CycNum(-1), CycNum(1),
         CycNum(0), CycNum(-2),
         CycNum(1), CycNum(1);
    return b;
  }
  // v1 = (1 + xi^2, -(1 + xi), 0), v2 = (1 - xi + xi^2, 0, -1)
  b(0, 0) = CycNum(1) + xiPow(k, 2);
  b(1, 0) = -(CycNum(1) + xiPow(k, 1));
  b(2, 0) = CycNum(0);
  b(0, 1) = CycNum(1) - xiPow(k, 1) + xiPow(k, 2);
  b(1, 1) = CycNum(0);
  b(2, 1) = CycNum(-1);
  return b;
}

MatC threeMagnonBasis(int k) {
  MatC b(5, 2);
  if (brillouinRep(k) == 0) {
    b << CycNum(2), CycNum(0),
         CycNum(-3), CycNum(1),
         CycNum(2), CycNum(0),
         CycNum(-3), CycNum(-1),
         CycNum(2), CycNum(0);
    return b;
  }
  b(0, 0) = CycNum(0);
  b(1, 0) = -(CycNum(1) + xiPow(k, -2));
  b(2, 0) = -(xiPow(k, 2) - xiPow(k, -2));
  b(3, 0) = CycNum(1) + xiPow(k, 2);
  b(4, 0) = xiPow(k, -1) - xiPow(k, -2);
  b(0, 1) = xiPow(k, 1) - xiPow(k, 5);
  b(1, 1) = xiPow(k, 5) + xiPow(k, 6);
  b(2, 1) = CycNum(0);
  b(3, 1) = -(xiPow(k, 1) + xiPow(k, 2));
  b(4, 1) = xiPow(k, 3) - xiPow(k, 1);
  return b;
}

}  // namespace

MatC highestWeightMatrix(int rPrime, int k) {
  const bool zone0 = brillouinRep(k) == 0;
  switch (rPrime) {
    case 0:
      if (!zone0) throw std::domain_error("r' = 0 exists only at k = 0");
      return MatC::Identity(1, 1);
    case 1:
      if (zone0) throw std::domain_error("r' = 1 is empty at k = 0");
      return MatC::Identity(1, 1);
    case 2: return twoMagnonBasis(k);
    case 3: return threeMagnonBasis(k);
    default: throw std::domain_error("r' out of range");
  }
}

MatC highestWeightKernel(int rPrime, int k) {
  if (rPrime < 2 || rPrime > 3) throw std::domain_error("kernel path covers r' = 2, 3");
  MatC image = sBlock(rPrime - 1, 1, k);
  return kernelOf<CycNum>(dagger<CycNum>(image));
}

MatR qubitHamiltonian(int rPrime, int k) {
  if (brillouinRep(k) == 0) throw std::domain_error("qubit Hamiltonian needs k != 0");
  if (rPrime < 2 || rPrime > 3) throw std::domain_error("r' must be 2 or 3");
  MatC basis = highestWeightMatrix(rPrime, k);
  MatC h = fourierBlock(rPrime, k);
  MatC m = solveExact<CycNum>(basis, h * basis);
  MatR out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      auto real = project(m(i, j));
      if (!real) throw std::logic_error("qubit Hamiltonian entry left Q(rho)");
      out(i, j) = *real;
    }
  return out;
}

ShiftedCharPoly charpolyDisc(int rPrime, int k) {
  MatR m = qubitHamiltonian(rPrime, k);
  RhoNum a00 = m(0, 0) + RhoNum(4), a11 = m(1, 1) + RhoNum(4);
  ShiftedCharPoly cp;
  cp.trace = a00 + a11;
  cp.det = a00 * a11 - m(0, 1) * m(1, 0);
  cp.disc = cp.trace * cp.trace - RhoNum(4) * cp.det;
  return cp;
}

std::pair<QuadRho, QuadRho> energiesAt(int rPrime, int k) {
  const bool zone0 = brillouinRep(k) == 0;
  switch (rPrime) {
    case 0:
      if (!zone0) throw std::domain_error("r' = 0 exists only at k = 0");
      return {QuadRho(0), QuadRho(0)};
    case 1: {
      if (zone0) throw std::domain_error("r' = 1 is empty at k = 0");
      RhoNum e = RhoNum(-2) + RhoNum::rhoConjugate(kClassOf(k));
      return {QuadRho(e), QuadRho(e)};
    }
    case 2:
      if (zone0) return {QuadRho(-2), QuadRho(-6)};
      break;
    case 3:
      if (zone0) return {QuadRho(-5), QuadRho(-5)};
      break;
    default:
      throw std::domain_error("r' out of range");
  }
  ShiftedCharPoly cp = charpolyDisc(rPrime, k);
  DiscTag tag(rPrime, kClassOf(k));
  RhoNum base = cp.trace * RhoNum(ratOf(1, 2)) - RhoNum(4);
  RhoNum half(ratOf(1, 2));
  return {QuadRho(base, half, tag), QuadRho(base, -half, tag)};
}

MatC projectorBlock(int r, int rPrime, int k) {
  if (rPrime > r) throw std::domain_error("projector needs r' <= r");
  MatC lifted = highestWeightMatrix(rPrime, k);
  if (r > rPrime) lifted = sBlock(rPrime, r - rPrime, k) * lifted;
  MatC gram = dagger<CycNum>(lifted) * lifted;
  return lifted * inverseOf<CycNum>(gram) * dagger<CycNum>(lifted);
}

namespace {

MatQuadC rankOneState(const VecC& w) {
  CycNum norm = 0;
  for (Eigen::Index i = 0; i < w.size(); ++i) norm += w(i).conj() * w(i);
  MatQuadC out(w.size(), w.size());
  for (Eigen::Index i = 0; i < w.size(); ++i)
    for (Eigen::Index j = 0; j < w.size(); ++j)
      out(i, j) = QuadCyc(w(i) * w(j).conj() / norm);
  return out;
}

}  // namespace

DensityPair densityMatrices(int r, int rPrime, int k) {
  if (rPrime < 2 || rPrime > 3) throw std::domain_error("density matrices need r' = 2, 3");
  if (rPrime > r) throw std::domain_error("density matrices need r' <= r");
  if (brillouinRep(k) == 0) {
    MatC basis = highestWeightMatrix(rPrime, 0);
    MatC lift = r > rPrime ? MatC(sBlock(rPrime, r - rPrime, 0)) : MatC();
    DensityPair dp;
    for (int col = 0; col < 2; ++col) {
      VecC w = basis.col(col);
      if (r > rPrime) w = lift * w;
      (col == 0 ? dp.plus : dp.minus) = rankOneState(w);
    }
    return dp;
  }
  DiscTag tag(rPrime, kClassOf(k));
  MatQuadC p = toQuadC(projectorBlock(r, rPrime, k));
  MatQuadC hp = toQuadC(fourierBlock(r, k)) * p;
  auto [ePlus, eMinus] = energiesAt(rPrime, k);
  // 1/sqrt(D) = (1/D) sqrt(D)
  QuadCyc invRoot(CycNum(0), embed(discriminantRho(tag).inverse()), tag);
  auto level = [&](const QuadRho& other, int nu) {
    MatQuadC num = hp - p * QuadCyc(toCyc(other));
    return MatQuadC(num * (invRoot * QuadCyc(nu)));
  };
  DensityPair dp;
  dp.plus = level(eMinus, +1);
  dp.minus = level(ePlus, -1);
  return dp;
}

}  // namespace hepta
