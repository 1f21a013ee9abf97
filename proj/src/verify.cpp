#include "hepta/verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include "hepta/galois.hpp"
#include "hepta/golden.hpp"
#include "hepta/numeric.hpp"
#include "hepta/oracle.hpp"

namespace hepta {

bool VerifyReport::allPass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const Check& c) { return c.pass; });
}

int VerifyReport::failures() const {
  return int(std::count_if(checks.begin(), checks.end(),
                           [](const Check& c) { return !c.pass; }));
}

void VerifyReport::print(std::ostream& os, bool verbose) const {
  for (const Check& c : checks) {
    os << (c.pass ? "PASS" : "FAIL") << "  " << c.name << "  [" << c.anchor << "]\n";
    if (!c.pass || verbose) {
      if (!c.expected.empty()) os << "      expected: " << c.expected << "\n";
      if (!c.actual.empty()) os << "      actual:   " << c.actual << "\n";
    }
  }
  os << checks.size() << " checks, " << failures() << " failed\n";
}

namespace {

using Checks = std::vector<Check>;

void push(Checks& out, const std::string& name, const std::string& anchor,
          bool pass, const std::string& expected = "", const std::string& actual = "") {
  out.push_back(Check{name, anchor, pass, expected, actual});
}

template <class F>
void pushMatEq(Checks& out, const std::string& name, const std::string& anchor,
               const Mat<F>& got, const Mat<F>& want) {
  bool ok = sameMat<F>(got, want);
  push(out, name, anchor, ok, ok ? "" : matToString<F>(want),
       ok ? "" : matToString<F>(got));
}

const std::vector<int> kNonzero = {-3, -2, -1, 1, 2, 3};

std::mt19937& rng() {
  static std::mt19937 gen(20260808u);
  return gen;
}

Rat randomRat(long span = 20) {
  std::uniform_int_distribution<long> num(-span, span);
  std::uniform_int_distribution<long> den(1, 6);
  return ratOf(num(rng()), den(rng()));
}

RhoNum randomRho() { return RhoNum(randomRat(), randomRat(), randomRat()); }

CycNum randomCyc() {
  std::array<Rat, 6> c;
  for (auto& q : c) q = randomRat();
  return CycNum(c);
}

RhoNum randomIntegralRho(long span = 9) {
  std::uniform_int_distribution<long> num(-span, span);
  return RhoNum(Rat(num(rng())), Rat(num(rng())), Rat(num(rng())));
}

// ---------------------------------------------------------------- section 2

Checks section2() {
  Checks out;

  {
    bool ok = true;
    for (int r = 0; r <= 7; ++r)
      ok = ok && int(buildConfigs(r).size()) == binomial7(r);
    push(out, "dims/config-count", "|Q_r| = C(7,r)", ok);
  }
  {
    bool sym = true, zero = true;
    for (int r = 0; r <= 7; ++r) {
      MatQ h = hamiltonianArith(r);
      for (Eigen::Index i = 0; i < h.rows(); ++i) {
        Rat rowSum = 0, colSum = 0;
        for (Eigen::Index j = 0; j < h.cols(); ++j) {
          sym = sym && h(i, j) == h(j, i) && isInteger(h(i, j));
          rowSum += h(i, j);
          colSum += h(j, i);
        }
        zero = zero && rowSum == 0 && colSum == 0;
      }
    }
    push(out, "ops/hamiltonian-symmetric", "H_r integer and symmetric", sym);
    push(out, "ops/hamiltonian-rowsums", "all row/column sums of H_r vanish", zero);
  }
  {
    // Two-deviation diagonal: -2 for an adjacent pair, -4 otherwise.
    auto level = buildConfigs(2);
    MatQ h = hamiltonianArith(2);
    bool ok = true;
    for (int i = 0; i < int(level.size()); ++i) {
      auto pos = level[size_t(i)].positions();
      int gap = pos[1] - pos[0];
      bool adjacent = gap == 1 || gap == 6;
      ok = ok && h(i, i) == (adjacent ? -2 : -4);
    }
    push(out, "ops/hop-diagonal-r2", "diag H_2 = -2 adjacent, -4 otherwise", ok);
  }
  {
    bool ok = true;
    for (int r = 0; r <= 6; ++r) {
      MatQ lhs = sMinusMatrix(r) * hamiltonianArith(r);
      MatQ rhs = hamiltonianArith(r + 1) * sMinusMatrix(r);
      ok = ok && sameMat<Rat>(lhs, rhs);
    }
    push(out, "ops/intertwining", "S^- H_r = H_{r+1} S^-, r = 0..6", ok);
  }
  {
    bool ok = true;
    for (int r = 0; r <= 6; ++r) {
      MatQ s = sMinusMatrix(r);
      for (Eigen::Index j = 0; j < s.cols(); ++j) {
        Rat sum = 0;
        for (Eigen::Index i = 0; i < s.rows(); ++i) sum += s(i, j);
        ok = ok && sum == 7 - r;
      }
    }
    push(out, "ops/sminus-colsums", "column sums of S^- equal 7 - r", ok);
  }
  {
    auto dims = highestWeightDims();
    bool ok = dims == std::array<long, 4>{1, 6, 14, 14};
    std::ostringstream got;
    got << dims[0] << "," << dims[1] << "," << dims[2] << "," << dims[3];
    push(out, "dims/highest-weight", "dim ker S^+ = 1, 6, 14, 14 for r' = 0..3", ok,
         "1,6,14,14", got.str());
  }
  {
    bool ok = true;
    for (int k = -3; k <= 3; ++k) {
      for (int rp : {2, 3}) {
        MatC hw = highestWeightMatrix(rp, k);
        ok = ok && rankOf<CycNum>(hw) == 2;
        ok = ok && rankOf<CycNum>(highestWeightKernel(rp, k)) == 2;
        // lifted spaces keep dimension 2 for r' <= r <= 3
        for (int r = rp + 1; r <= 3; ++r)
          ok = ok && rankOf<CycNum>(Mat<CycNum>(sBlock(rp, r - rp, k) * hw)) == 2;
      }
    }
    push(out, "dims/qubit-blocks", "dim H_{r,r'}^k = 2 for r' = 2,3, all k", ok);
  }
  {
    bool ok = true;
    for (int r = 0; r <= 7; ++r) {
      long total = 0;
      for (int k = -3; k <= 3; ++k) total += long(orbitsAtMomentum(r, k).size());
      ok = ok && total == binomial7(r);
    }
    push(out, "dims/momentum-sum", "sum_k dim H_r^k = C(7,r)", ok);
  }
  return out;
}

// ---------------------------------------------------------------- section 3

Checks section3() {
  Checks out;

  {
    // Orbit table for r <= 3: t vectors, island counts, orbit counts.
    struct Row { int r; std::vector<std::vector<int>> ts; std::vector<int> fs; };
    const std::vector<Row> table = {
        {0, {{}}, {0}},
        {1, {{7}}, {1}},
        {2, {{1, 6}, {2, 5}, {3, 4}}, {1, 2, 2}},
        {3, {{1, 1, 5}, {1, 2, 4}, {1, 3, 3}, {1, 4, 2}, {2, 2, 3}}, {1, 2, 2, 2, 3}},
    };
    bool ok = true;
    for (const Row& row : table) {
      auto orbits = buildOrbits(row.r);
      ok = ok && orbits.size() == row.ts.size();
      for (size_t i = 0; i < orbits.size() && ok; ++i)
        ok = orbits[i].t == row.ts[i] && orbits[i].islands == row.fs[i];
    }
    push(out, "dims/orbit-table", "orbit structure of Q_r for r <= 3", ok);
  }
  {
    // Orbits partition each level, members realize the canonical t.
    bool ok = true;
    for (int r = 0; r <= 7 && ok; ++r) {
      std::set<unsigned> seen;
      size_t total = 0;
      for (const Orbit& o : buildOrbits(r)) {
        std::set<unsigned> members;
        for (int j = 1; j <= 7; ++j) members.insert(o.memberAt(j).mask);
        ok = ok && int(members.size()) == o.size;
        total += members.size();
        seen.insert(members.begin(), members.end());
      }
      ok = ok && total == seen.size() && seen.size() == size_t(binomial7(r));
    }
    push(out, "dims/orbit-partition", "C_7 orbits partition Q_r", ok);
  }
  {
    CycNum w = CycNum::omega();
    CycNum w7 = 1;
    for (int i = 0; i < 7; ++i) w7 = w7 * w;
    CycNum sum = 0;
    for (int i = 0; i <= 6; ++i) sum += CycNum::omegaPow(i);
    push(out, "field/omega-order", "w^7 = 1", w7 == CycNum(1));
    push(out, "field/omega-sum", "1 + w + ... + w^6 = 0", sum.isZero());
  }
  {
    bool ok = CycAut(2).compose(CycAut(4)) == CycAut(1);
    for (int l = 1; l <= 6 && ok; ++l) {
      for (int i = 0; i < 40 && ok; ++i) {
        CycNum a = randomCyc(), b = randomCyc();
        CycAut t{l};
        ok = applyAut(t, a * b) == applyAut(t, a) * applyAut(t, b) &&
             applyAut(t, a + b) == applyAut(t, a) + applyAut(t, b);
      }
    }
    push(out, "field/tau-group", "tau_l tau_m = tau_{lm}; tau_l is a ring map", ok);
  }
  {
    RhoNum r = RhoNum::rho();
    bool ok = RhoNum::rhoConjugate(2) == r * r - RhoNum(2);
    ok = ok && RhoNum::rhoConjugate(4) == RhoNum(1) - r - r * r;
    ok = ok && (RhoNum::rhoConjugate(1) + RhoNum::rhoConjugate(2) +
                RhoNum::rhoConjugate(4)) == RhoNum(-1);
    ok = ok && (r * r * r + r * r - RhoNum(2) * r - RhoNum(1)).isZero();
    // (ro34): mu^3 = 1 + 2mu - mu^2, mu^4 = -1 - mu + 3mu^2
    RhoNum r3 = r * r * r, r4 = r3 * r;
    ok = ok && r3 == RhoNum(1) + RhoNum(2) * r - r * r;
    ok = ok && r4 == RhoNum(-1) - r + RhoNum(3) * r * r;
    push(out, "field/rho-conjugates", "rho_2 = rho^2-2, rho_4 = 1-rho-rho^2, w(rho) = 0", ok);
  }
  {
    bool ok = true;
    for (int i = 0; i < 60; ++i) {
      RhoNum x = randomRho();
      auto back = project(embed(x));
      ok = ok && back && *back == x;
      ok = ok && applyAut(CycAut(-1), embed(x)) == embed(x);
    }
    ok = ok && !project(CycNum::omega()).has_value();
    push(out, "field/embed-project", "project(embed(x)) = x; conjugation fixes the image", ok);
  }
  {
    CycNum eta1 = CycNum::omegaPow(1) + CycNum::omegaPow(2) + CycNum::omegaPow(4);
    CycNum etaM1 = CycNum::omegaPow(-1) + CycNum::omegaPow(-2) + CycNum::omegaPow(-4);
    CycNum eta = eta1 - etaM1;
    push(out, "field/eta-square", "eta = eta_1 - eta_{-1} satisfies eta^2 = -7",
         eta * eta == CycNum(-7));
  }
  {
    // Degrees in the cyclotomic lattice: the six distinct conjugates of w
    // all annihilate x^6+...+1; the cubic has no rational root; eta is a
    // degree-2 irrationality.
    bool ok = true;
    std::set<std::array<Rat, 6>> conj;
    for (int l = 1; l <= 6; ++l) {
      CycNum wl = CycNum::omegaPow(l);
      CycNum f = 0;
      for (int p = 0; p <= 6; ++p) f += CycNum::omegaPow(l * p);
      ok = ok && f.isZero();
      conj.insert(wl.coeffs());
    }
    ok = ok && conj.size() == 6;
    auto w = [](const Rat& x) -> Rat { return x * x * x + x * x - 2 * x - 1; };
    ok = ok && w(Rat(1)) != 0 && w(Rat(-1)) != 0;  // rational-root test
    CycNum eta = CycNum::omegaPow(1) + CycNum::omegaPow(2) + CycNum::omegaPow(4) -
                 CycNum::omegaPow(-1) - CycNum::omegaPow(-2) - CycNum::omegaPow(-4);
    ok = ok && !eta.isRational();
    for (const auto& node : cyclotomicLattice())
      ok = ok && node.degreeOverQ >= 1;
    push(out, "dims/lattice-cyclotomic", "[Q(w):Q]=6, [Q(rho):Q]=3, [Q(eta):Q]=2", ok);
  }
  {
    bool ok = true;
    for (int r = 0; r <= 7 && ok; ++r) {
      MatC w = waveletBasis(r);
      MatC winv = waveletBasisInverse(r);
      ok = sameMat<CycNum>(MatC(winv * w), MatC(MatC::Identity(w.cols(), w.cols())));
      if (!ok) break;
      MatC h = castMat<Rat, CycNum>(hamiltonianArith(r));
      MatC conj = winv * h * w;
      auto cols = waveletColumns(r);
      // expected block-diagonal assembled from fourierBlock
      MatC expect = MatC::Zero(conj.rows(), conj.cols());
      Eigen::Index off = 0;
      for (int k = -3; k <= 3; ++k) {
        MatC blk = fourierBlock(r, k);
        expect.block(off, off, blk.rows(), blk.cols()) = blk;
        off += blk.rows();
      }
      ok = sameMat<CycNum>(conj, expect);
    }
    push(out, "ops/block-diagonalization",
         "W^-1 H_r W equals the direct sum of the momentum blocks", ok);
  }
  return out;
}

// ---------------------------------------------------------------- section 4

Checks section4() {
  Checks out;

  pushMatEq<CycNum>(out, "fixture/ham0", "H_0^0 = [0]", fourierBlock(0, 0),
                    MatC(MatC::Zero(1, 1)));
  {
    bool ok1 = true, ok2 = true, ok3 = true;
    for (int k = -3; k <= 3; ++k) {
      ok1 = ok1 && sameMat<CycNum>(fourierBlock(1, k), golden::block1(k));
      ok2 = ok2 && sameMat<CycNum>(fourierBlock(2, k), golden::block2(k));
      ok3 = ok3 && sameMat<CycNum>(fourierBlock(3, k), golden::block3(k));
    }
    push(out, "fixture/ham1", "H_1^k = [-2 + xi + conj(xi)]", ok1);
    push(out, "fixture/ham2", "H_2^k entrywise, all k", ok2);
    push(out, "fixture/ham3", "H_3^k entrywise, all k", ok3);
    if (!ok2)
      pushMatEq<CycNum>(out, "fixture/ham2-detail(k=1)", "H_2^1", fourierBlock(2, 1),
                        golden::block2(1));
    if (!ok3)
      pushMatEq<CycNum>(out, "fixture/ham3-detail(k=1)", "H_3^1", fourierBlock(3, 1),
                        golden::block3(1));
  }
  {
    bool okS11 = true, okS21 = true, okComp = true;
    for (int k = -3; k <= 3; ++k) {
      okS11 = okS11 && sameMat<CycNum>(sBlock(1, 1, k), golden::s11(k));
      okS21 = okS21 && sameMat<CycNum>(sBlock(2, 1, k), golden::s21(k));
      okComp = okComp && sameMat<CycNum>(sBlock(1, 2, k),
                                         MatC(sBlock(2, 1, k) * sBlock(1, 1, k)));
    }
    push(out, "fixture/s11", "S_{1,1}^k = (1+conj(xi), 1+conj(xi)^2, 1+conj(xi)^3)^T", okS11);
    push(out, "fixture/s21", "S_{2,1}^k entrywise, all k", okS21);
    push(out, "fixture/s12-composition", "S_{1,2}^k = S_{2,1}^k S_{1,1}^k", okComp);
    if (!okS11)
      pushMatEq<CycNum>(out, "fixture/s11-detail(k=1)", "S_{1,1}^1", sBlock(1, 1, 1),
                        golden::s11(1));
    if (!okS21)
      pushMatEq<CycNum>(out, "fixture/s21-detail(k=1)", "S_{2,1}^1", sBlock(2, 1, 1),
                        golden::s21(1));
  }
  {
    bool ok = true;
    for (int k : kNonzero) {
      auto tr = [](const MatC& s) {
        return traceOf<CycNum>(Mat<CycNum>(s * dagger<CycNum>(s)));
      };
      ok = ok && tr(sBlock(1, 1, k)) == CycNum(5);
      ok = ok && tr(sBlock(2, 1, k)) == CycNum(14);
      ok = ok && tr(sBlock(1, 2, k)) == CycNum(40);
    }
    push(out, "ops/ss-dagger-traces", "tr S S^dag = 5, 14, 40 for k != 0", ok);
  }
  {
    bool ok = true;
    for (int k : kNonzero) {
      MatC s = sBlock(1, 1, k);
      CycNum e = CycNum(-2) + CycNum::omegaPow(k) + CycNum::omegaPow(-k);
      ok = ok && sameMat<CycNum>(MatC(fourierBlock(2, k) * s), MatC(s * e));
    }
    push(out, "ops/one-magnon-eigenstate",
         "H_2^k S^-|G,1,k> = (-2 + xi + conj(xi)) S^-|G,1,k>", ok);
  }
  {
    bool ok = true;
    for (int k = -3; k <= 3; ++k) {
      for (int rp : {2, 3}) {
        MatC explicitBasis = highestWeightMatrix(rp, k);
        MatC kernel = highestWeightKernel(rp, k);
        // each explicit vector annihilated by S^+ restricted to the block
        MatC sPlus = dagger<CycNum>(sBlock(rp - 1, 1, k));
        ok = ok && isZeroMat<CycNum>(MatC(sPlus * explicitBasis));
        // spans agree: stacking does not raise the rank
        MatC joint(kernel.rows(), kernel.cols() + explicitBasis.cols());
        joint.leftCols(kernel.cols()) = kernel;
        joint.rightCols(explicitBasis.cols()) = explicitBasis;
        ok = ok && rankOf<CycNum>(joint) == 2 && rankOf<CycNum>(explicitBasis) == 2;
      }
    }
    push(out, "dims/highest-weight-span",
         "explicit qubit bases span ker(S^+) exactly, all k", ok);
  }
  {
    bool ok2 = true, ok3 = true;
    for (int k : kNonzero) {
      ok2 = ok2 && sameMat<RhoNum>(qubitHamiltonian(2, k), golden::qubit2(k));
      ok3 = ok3 && sameMat<RhoNum>(qubitHamiltonian(3, k), golden::qubit3(k));
    }
    push(out, "fixture/qubit-h2", "H_{2,2}^k = [[-mu,2-mu],[2+mu,mu_4]] - 4I", ok2);
    push(out, "fixture/qubit-h3", "H_{3,3}^k = [[-3-mu_4,-1+mu_2-2mu_4],[1+mu_2,1+mu_2]] - 4I", ok3);
    if (!ok2)
      pushMatEq<RhoNum>(out, "fixture/qubit-h2-detail(k=1)", "H_{2,2}^1",
                        qubitHamiltonian(2, 1), golden::qubit2(1));
    if (!ok3)
      pushMatEq<RhoNum>(out, "fixture/qubit-h3-detail(k=1)", "H_{3,3}^1",
                        qubitHamiltonian(3, 1), golden::qubit3(1));
  }
  {
    bool ok = true;
    for (int k : kNonzero) {
      for (int rp : {2, 3}) {
        ShiftedCharPoly cp = charpolyDisc(rp, k);
        ok = ok && cp.trace == golden::shiftedTrace(rp, k);
        ok = ok && cp.det == golden::shiftedDet(rp, k);
      }
    }
    push(out, "spectral/charpoly", "f_{r',r'}^k(x) coefficients in X = x+4", ok);
  }
  {
    bool ok = true;
    for (int k : kNonzero) {
      ok = ok && charpolyDisc(2, k).disc == golden::discriminant2(kClassOf(k));
      ok = ok && charpolyDisc(3, k).disc == golden::discriminant3(kClassOf(k));
      ok = ok && charpolyDisc(2, k).disc == discriminantRho(DiscTag(2, kClassOf(k)));
      ok = ok && charpolyDisc(3, k).disc == discriminantRho(DiscTag(3, kClassOf(k)));
    }
    push(out, "spectral/discriminants",
         "Delta_2^k = 16-r-3r^2, ...; Delta_3^k = 25-10r-3r^2, ...", ok);
  }
  {
    auto [e2p, e2m] = energiesAt(2, 0);
    auto [e3p, e3m] = energiesAt(3, 0);
    auto [e0, e0b] = energiesAt(0, 0);
    bool ok = e2p == QuadRho(-2) && e2m == QuadRho(-6) && e3p == QuadRho(-5) &&
              e3m == QuadRho(-5) && e0 == QuadRho(0) && e0b == QuadRho(0);
    push(out, "spectral/k0-energies", "E = 0 (r'=0), -2/-6 (r'=2), -5 double (r'=3)", ok,
         "0, -2, -6, -5, -5",
         e0.str() + ", " + e2p.str() + ", " + e2m.str() + ", " + e3p.str() + ", " + e3m.str());
  }
  {
    bool ok = true;
    for (int k : kNonzero) {
      for (int rp : {2, 3}) {
        ShiftedCharPoly cp = charpolyDisc(rp, k);
        auto check = [&](const QuadRho& e) {
          QuadRho x = e + QuadRho(4);  // shifted variable
          QuadRho f = x * x - QuadRho(cp.trace) * x + QuadRho(cp.det);
          return f.isZero();
        };
        auto [ep, em] = energiesAt(rp, k);
        ok = ok && check(ep) && check(em);
      }
    }
    push(out, "spectral/energy-satisfies-charpoly", "f(E_{r',nu}^k) = 0 exactly", ok);
  }
  {
    bool ok = true;
    for (int k : {1, 2, 3}) {
      for (int rp : {1, 2, 3}) {
        auto [ep, em] = energiesAt(rp, k);
        auto [epn, emn] = energiesAt(rp, -k);
        ok = ok && ep == epn && em == emn;
      }
    }
    push(out, "spectral/k-reflection", "E_{r',nu}^{-k} = E_{r',nu}^k", ok);
  }
  {
    // Explicit k = 0 eigenvectors and their lowered images.
    MatC h2 = fourierBlock(2, 0), h3 = fourierBlock(3, 0);
    auto isEigen = [](const MatC& h, const VecC& v, long e) {
      return sameMat<CycNum>(MatC(h * v), MatC(v * CycNum(e)));
    };
    VecC v20(3), v221(3), v222(3);
    v20 << CycNum(1), CycNum(1), CycNum(1);
    v221 << CycNum(-1), CycNum(0), CycNum(1);
    v222 << CycNum(1), CycNum(-2), CycNum(1);
    VecC v30(5), v321(5), v322(5), v331(5), v332(5);
    v30 << CycNum(1), CycNum(1), CycNum(1), CycNum(1), CycNum(1);
    v321 << CycNum(-2), CycNum(0), CycNum(1), CycNum(0), CycNum(1);
    v322 << CycNum(0), CycNum(0), CycNum(-1), CycNum(0), CycNum(1);
    v331 << CycNum(2), CycNum(-3), CycNum(2), CycNum(-3), CycNum(2);
    v332 << CycNum(0), CycNum(1), CycNum(0), CycNum(-1), CycNum(0);
    bool ok = isEigen(h2, v20, 0) && isEigen(h2, v221, -2) && isEigen(h2, v222, -6) &&
              isEigen(h3, v30, 0) && isEigen(h3, v321, -2) && isEigen(h3, v322, -6) &&
              isEigen(h3, v331, -5) && isEigen(h3, v332, -5);
    // v_{2,0}^0 = (1/2) S^-|G,1,0>; lowered two-magnon states match S^- images
    MatC s110 = sBlock(1, 1, 0), s210 = sBlock(2, 1, 0);
    ok = ok && sameMat<CycNum>(MatC(s110), MatC(v20 * CycNum(2)));
    ok = ok && sameMat<CycNum>(MatC(s210 * v221), MatC(v321));
    ok = ok && sameMat<CycNum>(MatC(s210 * v222), MatC(v322 * CycNum(-3)));
    push(out, "spectral/k0-eigenvectors",
         "explicit k = 0 eigenvectors and their S^- images", ok);
  }
  {
    bool okForms = true, okAlgebra = true, okTraces = true;
    for (int k : kNonzero) {
      MatC s11 = sBlock(1, 1, k), s21 = sBlock(2, 1, k), s12 = sBlock(1, 2, k);
      MatC p21 = projectorBlock(2, 1, k), p22 = projectorBlock(2, 2, k);
      MatC p31 = projectorBlock(3, 1, k), p32 = projectorBlock(3, 2, k),
           p33 = projectorBlock(3, 3, k);
      CycNum f5 = CycNum(ratOf(1, 5)), f40 = CycNum(ratOf(1, 40));
      CycNum f3 = CycNum(ratOf(1, 3)), f15 = CycNum(ratOf(1, 15)), f24 = CycNum(ratOf(1, 24));
      okForms = okForms && sameMat<CycNum>(p21, MatC(s11 * dagger<CycNum>(s11) * f5));
      okForms = okForms && sameMat<CycNum>(p22, MatC(MatC::Identity(3, 3) - p21));
      okForms = okForms && sameMat<CycNum>(p31, MatC(s12 * dagger<CycNum>(s12) * f40));
      okForms = okForms &&
                sameMat<CycNum>(p32, MatC(s21 * dagger<CycNum>(s21) * f3 -
                                          s12 * dagger<CycNum>(s12) * f15));
      okForms = okForms &&
                sameMat<CycNum>(p33, MatC(MatC::Identity(5, 5) -
                                          s21 * dagger<CycNum>(s21) * f3 +
                                          s12 * dagger<CycNum>(s12) * f24));
      for (const MatC* p : {&p21, &p22, &p31, &p32, &p33}) {
        okAlgebra = okAlgebra && sameMat<CycNum>(MatC(*p * *p), *p);
        okAlgebra = okAlgebra && sameMat<CycNum>(dagger<CycNum>(*p), *p);
      }
      okAlgebra = okAlgebra &&
                  sameMat<CycNum>(MatC(p21 + p22), MatC(MatC::Identity(3, 3)));
      okAlgebra = okAlgebra &&
                  sameMat<CycNum>(MatC(p31 + p32 + p33), MatC(MatC::Identity(5, 5)));
      okTraces = okTraces && traceOf<CycNum>(p21) == CycNum(1) &&
                 traceOf<CycNum>(p22) == CycNum(2) && traceOf<CycNum>(p31) == CycNum(1) &&
                 traceOf<CycNum>(p32) == CycNum(2) && traceOf<CycNum>(p33) == CycNum(2);
    }
    push(out, "fixture/projector-closed-forms",
         "P_{2,1} = S S^dag/5, P_{3,1} = /40, P_{3,2} = /3 - /15, P_{3,3} = I - /3 + /24",
         okForms);
    if (!okForms) {
      MatC s21 = sBlock(2, 1, 1), s12 = sBlock(1, 2, 1);
      pushMatEq<CycNum>(out, "fixture/projector-detail(P_{3,2}^1)", "P_{3,2}^1",
                        projectorBlock(3, 2, 1),
                        MatC(s21 * dagger<CycNum>(s21) * CycNum(ratOf(1, 3)) -
                             s12 * dagger<CycNum>(s12) * CycNum(ratOf(1, 15))));
    }
    push(out, "ops/projector-algebra", "P^2 = P = P^dag, sum_r' P = I, k != 0", okAlgebra);
    push(out, "ops/projector-traces", "tr P_{r,r'}^k = dim H_{r,r'}^k", okTraces);
  }
  {
    bool ok = true;
    std::vector<int> allK = {-3, -2, -1, 0, 1, 2, 3};
    for (int k : allK) {
      for (auto [r, rp] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {3, 3}}) {
        DensityPair dp = densityMatrices(r, rp, k);
        MatQuadC h = toQuadC(fourierBlock(r, k));
        MatQuadC p = toQuadC(projectorBlock(r, rp, k));
        auto [ePlus, eMinus] = energiesAt(rp, k);
        auto checkState = [&](const MatQuadC& rho, const QuadRho& e) {
          bool good = sameMat<QuadCyc>(MatQuadC(rho * rho), rho);
          good = good && traceOf<QuadCyc>(rho) == QuadCyc(1);
          good = good && sameMat<QuadCyc>(MatQuadC(h * rho), MatQuadC(rho * QuadCyc(toCyc(e))));
          return good;
        };
        ok = ok && checkState(dp.plus, ePlus) && checkState(dp.minus, eMinus);
        ok = ok && sameMat<QuadCyc>(MatQuadC(dp.plus + dp.minus), p);
      }
    }
    push(out, "ops/density-identities",
         "rho^2 = rho, tr rho = 1, H rho = E rho, rho_{-1} + rho_{+1} = P", ok);
  }
  {
    auto records = fullSpectrum();
    long total = 0;
    std::map<int, long> byWeight;
    for (const auto& rec : records) {
      total += rec.multiplicity;
      byWeight[rec.rPrime] += rec.multiplicity;
    }
    bool ok = total == 128 && records.size() == 35 && byWeight[0] == 8 &&
              byWeight[1] == 36 && byWeight[2] == 56 && byWeight[3] == 28;
    push(out, "dims/multiplicity-accounting",
         "1*8 + 6*6 + 14*4 + 14*2 = 128 level multiplicities", ok, "128",
         std::to_string(total));
  }
  {
    auto exact = numericSpectrum();
    auto numeric = jacobiEigenvalues(DenseSym(fullArithmeticHamiltonian()), 1e-12);
    auto cmp = compareSpectra(exact, numeric, 1e-9);
    push(out, "oracle/full-spectrum",
         "128 Jacobi eigenvalues match the exact spectrum to 1e-9", cmp.pass(1e-9),
         "max deviation <= 1e-9, clusters equal", cmp.detail);

    double sum = 0;
    for (double e : numeric) sum += e;
    double traceDev = std::abs(sum - double(arithmeticTraceByCounting()));
    push(out, "oracle/trace", "sum of oracle eigenvalues equals tr H (integer)",
         traceDev <= 1e-9, "<= 1e-9", std::to_string(traceDev));
  }
  {
    bool ok = true;
    std::string detail;
    for (int r = 0; r <= 7 && ok; ++r) {
      for (int k = -3; k <= 3 && ok; ++k) {
        std::vector<double> exact;
        int top = std::min(r, 7 - r);
        for (int rp = 0; rp <= top; ++rp) {
          if (rp == 0 && k != 0) continue;
          if (rp == 1 && k == 0) continue;
          auto [ep, em] = energiesAt(rp, k);
          exact.push_back(numericEmbedReal(ep));
          if (rp >= 2) exact.push_back(numericEmbedReal(em));
        }
        std::sort(exact.begin(), exact.end());
        auto numeric = blockOracleEigenvalues(r, k);
        auto cmp = compareSpectra(exact, numeric, 1e-9);
        if (!cmp.pass(1e-9)) {
          ok = false;
          detail = "r=" + std::to_string(r) + " k=" + std::to_string(k) + ": " + cmp.detail;
        }
      }
    }
    push(out, "oracle/per-block", "per-(r,k) oracle multisets match the exact levels",
         ok, "", detail);
  }
  {
    auto a = shuffledOracleEigenvalues(1u);
    auto b = shuffledOracleEigenvalues(97u);
    double dev = 0;
    for (size_t i = 0; i < a.size(); ++i) dev = std::max(dev, std::abs(a[i] - b[i]));
    push(out, "oracle/shuffle-stability",
         "row/column shuffles leave the sorted spectrum unchanged to 1e-10",
         a.size() == 128 && dev <= 1e-10, "<= 1e-10", std::to_string(dev));
  }
  return out;
}

// ---------------------------------------------------------------- section 5

Checks section5() {
  Checks out;

  {
    bool ok = true;
    for (int i = 0; i < 60; ++i) {
      Rat x = randomRat(9), y = randomRat(9);
      RhoNum a = randomRho();
      // N(x + a) = x^3 + tr(a) x^2 + ((tr a)^2 - tr(a^2))/2 x + N(a)
      Rat lhs = normToQ(RhoNum(x) + a);
      Rat ta = traceToQ(a), ta2 = traceToQ(a * a);
      Rat rhs = x * x * x + ta * x * x + (ta * ta - ta2) / 2 * x + normToQ(a);
      ok = ok && lhs == rhs;
      // N(x + y rho) = x^3 - x^2 y - 2 x y^2 + y^3
      Rat lhs2 = normToQ(RhoNum(x) + RhoNum(y) * RhoNum::rho());
      Rat rhs2 = x * x * x - x * x * y - 2 * x * y * y + y * y * y;
      ok = ok && lhs2 == rhs2;
    }
    push(out, "lemma/norm-closed-form",
         "N(x+a) cubic expansion and N(x+y rho) = x^3-x^2y-2xy^2+y^3", ok);
  }
  {
    RhoNum r = RhoNum::rho();
    bool ok = traceToQ(r) == -1 && normToQ(r) == 1;
    ok = ok && traceToQ(r * r) == 5;  // rho^2 = rho_2 + 2, so tr = -1 + 6
    // trace/norm against the multiplication-by-x map on Q(rho)
    for (int i = 0; i < 60 && ok; ++i) {
      RhoNum x = randomRho();
      MatQ m(3, 3);
      RhoNum basis[3] = {RhoNum(1), r, r * r};
      for (int col = 0; col < 3; ++col) {
        RhoNum prod = x * basis[col];
        for (int row = 0; row < 3; ++row) m(row, col) = prod.coeff(row);
      }
      Rat tr = m(0, 0) + m(1, 1) + m(2, 2);
      Rat det = m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
                m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
                m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
      ok = tr == traceToQ(x) && det == normToQ(x);
    }
    for (int i = 0; i < 1000 && ok; ++i) {
      RhoNum x = randomIntegralRho(), y = randomIntegralRho();
      ok = normToQ(x * y) == normToQ(x) * normToQ(y);
    }
    push(out, "lemma/trace-norm-values",
         "tr rho = -1, N(rho) = 1, tr rho^2 = 5; trace/norm = charpoly of mult map; N multiplicative",
         ok);
  }
  {
    RhoNum r = RhoNum::rho();
    RhoNum rho2 = RhoNum::rhoConjugate(2);
    RhoNum a = (r - RhoNum(1)) * (r - RhoNum(1));
    bool ok = a == rho2 - RhoNum(2) * r + RhoNum(3);
    ok = ok && traceToQ(a) == 10;
    ok = ok && a * a == RhoNum(13) * rho2 - RhoNum(13) * r + RhoNum(22);
    ok = ok && traceToQ(a * a) == 66;
    ok = ok && discriminantRho(DiscTag(2, 4)) == RhoNum(8) + a;
    for (int kc : {1, 2, 4})
      ok = ok && normToQ(discriminantRho(DiscTag(2, kc))) == 1289;
    ok = ok && isPrimeWord(1289);
    push(out, "lemma/lemma1", "N(Delta_2^k) = 1289, a prime; tr a = 10, tr a^2 = 66", ok);
  }
  {
    RhoNum r = RhoNum::rho();
    RhoNum f1 = RhoNum(5) - RhoNum(3) * r, f2 = RhoNum(5) + r;
    bool ok = discriminantRho(DiscTag(3, 1)) == f1 * f2;
    ok = ok && normToQ(f1) == 83 && normToQ(f2) == 91;
    ok = ok && 91 == 7 * 13 && isPrimeWord(83) && isPrimeWord(13) && isPrimeWord(7);
    for (int kc : {1, 2, 4})
      ok = ok && normToQ(discriminantRho(DiscTag(3, kc))) == 7553;
    ok = ok && 7553 == 7 * 13 * 83;
    push(out, "lemma/lemma2", "N(Delta_3^k) = 7553 = 7 * 13 * 83; N(5-3rho) = 83, N(5+rho) = 91", ok);
  }
  {
    RhoNum r = RhoNum::rho();
    CycAut tau(2);
    RhoNum f53 = RhoNum(5) - RhoNum(3) * r;
    RhoNum f3p = RhoNum(3) + r;
    RhoNum f2m = RhoNum(2) - r;
    auto t = [&](const RhoNum& x, int pow) { return applyAut(tau.power(pow), x); };
    bool ok = discriminantRho(DiscTag(3, 1)) == f53 * t(f3p, 1) * t(f2m, 1);
    ok = ok && discriminantRho(DiscTag(3, 2)) == t(f53, 1) * t(f3p, 2) * t(f2m, 2);
    ok = ok && discriminantRho(DiscTag(3, 4)) == t(f53, 2) * f3p * f2m;
    ok = ok && t(RhoNum(5) + r, 2) == f3p * f2m;
    ok = ok && normToQ(f3p) == 13 && normToQ(f2m) == 7;
    push(out, "lemma/lemma3",
         "Delta_3^k factorizations; tau^2(5+rho) = (3+rho)(2-rho)", ok);
  }
  {
    BigInt n2 = normToQ(discriminantRho(DiscTag(2, 1))).get_num();
    BigInt n3 = normToQ(RhoNum(3) + RhoNum::rho()).get_num();
    bool ok = (n2 - 1) % 7 == 0 && (n3 + 1) % 7 == 0;
    push(out, "lemma/norm-congruences", "N(Delta_2^1) = 1 mod 7, N(3+rho) = -1 mod 7", ok);
  }
  {
    // tau permutes the discriminants: tau(Delta_r^k) = Delta_r^{2k}.
    bool ok = true;
    for (int rp : {2, 3})
      for (int kc : {1, 2, 4})
        ok = ok && applyAut(CycAut(2), discriminantRho(DiscTag(rp, kc))) ==
                       discriminantRho(DiscTag(rp, kClassOf(2 * kc)));
    push(out, "lemma/discriminant-orbit", "tau Delta_{r'}^k = Delta_{r'}^{2k}", ok);
  }
  {
    bool ok = true;
    std::string detail;
    for (DiscTag tag : allDiscTags()) {
      auto res = sqrtInRho(discriminantRho(tag));
      bool good = res.status == SqrtInRhoResult::Status::Nonsquare && res.certificate;
      ok = ok && good;
      if (!good) detail += tag.name() + " undecided; ";
    }
    push(out, "theorem/nonsquare-discriminants",
         "all six Delta_{r'}^k are nonsquares in Q(rho)", ok, "", detail);
  }
  {
    auto sq = sqrtInRho(RhoNum::rho() * RhoNum::rho());
    bool ok = sq.status == SqrtInRhoResult::Status::Square &&
              (sq.root == RhoNum::rho() || sq.root == -RhoNum::rho());
    for (int i = 0; i < 200 && ok; ++i) {
      RhoNum y = randomIntegralRho(6);
      if (y.isZero()) continue;
      auto r = sqrtInRho(y * y);
      ok = r.status == SqrtInRhoResult::Status::Square && (r.root == y || r.root == -y);
    }
    // Norm test alone cannot settle Delta_2^1 Delta_2^2 (norm 1289^2); the
    // odd-valuation path must fire.
    auto mixed = sqrtInRho(discriminantRho(DiscTag(2, 1)) * discriminantRho(DiscTag(2, 2)));
    ok = ok && mixed.status == SqrtInRhoResult::Status::Nonsquare && mixed.certificate &&
         mixed.certificate->kind == NonsquareCertificate::Kind::OddValuation;
    push(out, "theorem/sqrt-reconstruction",
         "sqrt recovers +-y on 200 squares; odd valuation certifies Delta_2^1 Delta_2^2", ok);
  }
  {
    RhoNum d21 = discriminantRho(DiscTag(2, 1));
    RhoNum p31 = designatedPrime(DiscTag(3, 1));
    bool ok = valuationAt(d21, d21) == 1;
    ok = ok && valuationAt(discriminantRho(DiscTag(3, 1)), p31) == 1;
    ok = ok && valuationAt(d21, p31) == 0;
    ok = ok && valuationAt(d21 * d21, d21) == 2;
    push(out, "lemma/valuations",
         "v(Delta_2^1 | Delta_2^1) = 1, v(Delta_3^1 | tau(3+rho)) = 1, multiplicative", ok);
  }
  return out;
}

// ---------------------------------------------------------------- section 6

Checks section6() {
  Checks out;

  {
    std::vector<KummerCertificate> certs;
    bool ok = true;
    std::string detail;
    try {
      certs = kummerIndependence();
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    ok = ok && certs.size() == 63;
    for (const auto& c : certs) ok = ok && c.valuation % 2 == 1;
    push(out, "theorem/kummer-63",
         "63 nonempty subset products have odd valuation at a designated prime", ok,
         "63 odd-valuation certificates", detail.empty() ? std::to_string(certs.size()) : detail);
    push(out, "theorem/degree-64",
         "[H_E : Q(rho)] = 2^6 = 64 (six independent square classes)", ok);
  }
  {
    bool ok = true;
    for (DiscTag tag : allDiscTags()) {
      auto res = sqrtInRho(discriminantRho(tag));
      ok = ok && res.status == SqrtInRhoResult::Status::Nonsquare;
    }
    push(out, "theorem/quadratic-extensions", "[H_{r',E}^k : Q(rho)] = 2 for each tag", ok);
  }
  {
    // sqrtInRho must settle every subset product; no undecided outcomes.
    const auto& tags = allDiscTags();
    bool ok = true;
    for (unsigned mask = 1; mask < 64 && ok; ++mask) {
      RhoNum prod = 1;
      for (int i = 0; i < 6; ++i)
        if (mask >> i & 1) prod = prod * discriminantRho(tags[size_t(i)]);
      auto res = sqrtInRho(prod);
      ok = res.status == SqrtInRhoResult::Status::Nonsquare && res.certificate.has_value();
    }
    push(out, "theorem/kummer-products-nonsquare",
         "sqrt decision is Nonsquare (never undecided) on all 63 products", ok);
  }
  {
    // The ramified prime: the three conjugates of (2 - rho) generate the
    // same ideal, so they cannot separate the discriminants.
    RhoNum f = RhoNum(2) - RhoNum::rho();
    bool ok = true;
    for (int pow : {1, 2}) {
      RhoNum u = applyAut(CycAut(2).power(pow), f) / f;
      Rat n = normToQ(u);
      ok = ok && isIntegral(u) && (n == 1 || n == -1);
    }
    push(out, "lemma/ramified-ideal-units",
         "tau^j(2-rho)/(2-rho) are units of Z[rho]", ok);
  }
  {
    bool okOrders = true, okAxioms = true, okNormal = true;
    for (WreathVariant v : {WreathVariant::RealQubitRow, WreathVariant::RealTotal,
                            WreathVariant::ComplexQubitRow, WreathVariant::ComplexTotal}) {
      auto els = enumerateGroup(v);
      okOrders = okOrders && long(els.size()) == variantOrder(v);
      // index elements for a multiplication table
      auto encode = [](const WreathElement& g) {
        long code = g.l;
        for (const auto& row : g.eps)
          for (int s : row) code = code * 2 + (s < 0 ? 1 : 0);
        return code;
      };
      std::map<long, int> index;
      for (int i = 0; i < int(els.size()); ++i) index[encode(els[size_t(i)])] = i;
      const int n = int(els.size());
      std::vector<std::vector<int>> table(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), 0));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          auto it = index.find(encode(wreathMul(els[size_t(i)], els[size_t(j)])));
          okOrders = okOrders && it != index.end();  // closure
          table[size_t(i)][size_t(j)] = it->second;
        }
      // identity and inverses
      WreathElement id = wreathIdentity(v);
      int idIdx = index.at(encode(id));
      for (int i = 0; i < n; ++i) {
        okAxioms = okAxioms && table[size_t(idIdx)][size_t(i)] == i &&
                   table[size_t(i)][size_t(idIdx)] == i;
        int inv = index.at(encode(wreathInverse(els[size_t(i)])));
        okAxioms = okAxioms && table[size_t(i)][size_t(inv)] == idIdx &&
                   table[size_t(inv)][size_t(i)] == idIdx;
      }
      // exhaustive associativity via the table
      for (int i = 0; i < n && okAxioms; ++i)
        for (int j = 0; j < n && okAxioms; ++j)
          for (int k = 0; k < n; ++k)
            if (table[size_t(table[size_t(i)][size_t(j)])][size_t(k)] !=
                table[size_t(i)][size_t(table[size_t(j)][size_t(k)])]) {
              okAxioms = false;
              break;
            }
      // sign part = kernel of g -> l, a normal subgroup with cyclic quotient
      long signCount = 0;
      for (const auto& g : els) signCount += g.l == 1 ? 1 : 0;
      okNormal = okNormal && signCount * (variantIsReal(v) ? 3 : 6) == n;
      for (int i = 0; i < n && okNormal; ++i)
        for (int j = 0; j < n; ++j) {
          if (els[size_t(j)].l != 1) continue;
          auto conj = wreathMul(wreathMul(els[size_t(i)], els[size_t(j)]),
                                wreathInverse(els[size_t(i)]));
          if (conj.l != 1) {
            okNormal = false;
            break;
          }
        }
    }
    push(out, "group/orders", "wreath group orders 24, 192, 48, 384 by enumeration", okOrders);
    push(out, "group/axioms", "identity, inverses, exhaustive associativity", okAxioms);
    push(out, "group/normal-sign-part", "sign part normal, quotient cyclic", okNormal);
  }
  {
    // Degree bookkeeping along both lattices.
    bool ok = true;
    for (bool complexTower : {false, true}) {
      auto lattice = heisenbergLattice(complexTower);
      std::map<std::string, long> deg;
      for (const auto& n : lattice) deg[n.name] = n.degreeOverQ;
      for (const auto& n : lattice)
        for (const auto& p : n.parents) {
          ok = ok && deg.count(p) == 1;
          ok = ok && n.degreeOverQ % deg[p] == 0;  // degrees multiply along chains
        }
      long base = complexTower ? 6 : 3;
      ok = ok && deg["H_" + std::string(complexTower ? "G" : "E")] == 64 * base;
    }
    push(out, "dims/lattice-heisenberg",
         "lattice degrees: [H^k:base] = 2, [H_{r'}:base] = 8, [H:base] = 64", ok);
  }
  return out;
}

// ---------------------------------------------------------------- section 7

Checks section7() {
  Checks out;
  const auto group = enumerateGroup(WreathVariant::ComplexTotal);

  {
    bool ok = true;
    std::uniform_int_distribution<size_t> pick(0, group.size() - 1);
    for (int i = 0; i < 500 && ok; ++i) {
      const WreathElement& g = group[pick(rng())];
      DiscTag tag = allDiscTags()[size_t(i % 6)];
      QuadRho x(randomRho(), randomRho(), tag), y(randomRho(), randomRho(), tag);
      ok = actOnElement(g, x * y) == actOnElement(g, x) * actOnElement(g, y) &&
           actOnElement(g, x + y) == actOnElement(g, x) + actOnElement(g, y);
      QuadCyc cx(randomCyc(), randomCyc(), tag), cy(randomCyc(), randomCyc(), tag);
      ok = ok && actOnElement(g, cx * cy) == actOnElement(g, cx) * actOnElement(g, cy);
    }
    push(out, "action/field-automorphism",
         "g(xy) = g(x) g(y), g(x+y) = g(x) + g(y) on 500 random pairs", ok);
  }
  {
    bool ok = true;
    std::uniform_int_distribution<size_t> pick(0, group.size() - 1);
    for (int i = 0; i < 300 && ok; ++i) {
      const WreathElement& g = group[pick(rng())];
      const WreathElement& h = group[pick(rng())];
      DiscTag tag = allDiscTags()[size_t(i % 6)];
      QuadRho x(randomRho(), randomRho(), tag);
      ok = actOnElement(wreathMul(g, h), x) == actOnElement(g, actOnElement(h, x));
    }
    push(out, "action/composition", "(gh) x = g (h x)", ok);
  }
  {
    bool ok = true;
    for (int r = 1; r <= 3 && ok; ++r) {
      auto orbits = buildOrbits(r);
      for (int k = -3; k <= 3 && ok; ++k)
        for (int l = 1; l <= 6 && ok; ++l)
          for (const Orbit& o : orbits) {
            VecC w = waveletVector(r, o, k);
            VecC mapped(w.size());
            for (Eigen::Index i = 0; i < w.size(); ++i)
              mapped(i) = applyAut(CycAut(l), w(i));
            if (!sameMat<CycNum>(MatC(mapped),
                                 MatC(waveletVector(r, o, brillouinRep(l * k))))) {
              ok = false;
              break;
            }
          }
    }
    push(out, "action/wavelet-permutation", "theta_g |G,r,k,t> = |G,r,lk,t>", ok);
  }
  {
    // Precompute S, P, rho per momentum for the exhaustive operator checks.
    std::map<int, std::array<MatC, 3>> sOps;
    std::map<int, std::map<std::pair<int, int>, MatC>> projs;
    std::map<int, std::map<std::tuple<int, int, int>, MatQuadC>> dens;
    for (int k : kNonzero) {
      sOps[k] = {sBlock(1, 1, k), sBlock(2, 1, k), sBlock(1, 2, k)};
      for (auto [r, rp] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {3, 1}, {3, 2}, {3, 3}})
        projs[k][{r, rp}] = projectorBlock(r, rp, k);
      for (auto [r, rp] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {3, 3}}) {
        DensityPair dp = densityMatrices(r, rp, k);
        dens[k][{r, rp, +1}] = dp.plus;
        dens[k][{r, rp, -1}] = dp.minus;
      }
    }
    bool okS = true, okP = true, okD = true;
    for (const WreathElement& g : group) {
      for (int k : kNonzero) {
        int lk = brillouinRep(g.l * k);
        for (int s = 0; s < 3 && okS; ++s)
          okS = sameMat<CycNum>(actOnMatrix<CycNum>(g, sOps[k][size_t(s)]),
                                sOps[lk][size_t(s)]);
        for (auto& [key, p] : projs[k]) {
          if (!okP) break;
          okP = sameMat<CycNum>(actOnMatrix<CycNum>(g, p), projs[lk][key]);
        }
        for (auto& [key, rho] : dens[k]) {
          if (!okD) break;
          auto [r, rp, nu] = key;
          int nuOut = signFor(g, DiscTag(rp, kClassOf(k))) * nu;
          okD = sameMat<QuadCyc>(actOnMatrix<QuadCyc>(g, rho),
                                 dens[lk][{r, rp, nuOut}]);
        }
      }
      if (!okS || !okP || !okD) break;
    }
    push(out, "action/operators-s", "Theta_g S_{r,dr}^k = S_{r,dr}^{lk}, all 384 g", okS);
    push(out, "action/operators-p", "Theta_g P_{r,r'}^k = P_{r,r'}^{lk}, all 384 g", okP);
    push(out, "action/density-permutation",
         "Theta_g rho_{r,r',nu}^k = rho_{r,r',eps_k nu}^{lk}, all 384 g", okD);
  }
  {
    auto records = fullSpectrum();
    std::map<std::tuple<int, int, int>, const SpectrumRecord*> lookup;
    for (const auto& rec : records)
      lookup[{rec.k, rec.rPrime, rec.nu.value_or(0)}] = &rec;
    bool ok = true;
    for (const WreathElement& g : group) {
      for (const auto& rec : records) {
        SpectrumRecord mapped = actOnRecord(g, rec);
        auto it = lookup.find({mapped.k, mapped.rPrime, mapped.nu.value_or(0)});
        if (it == lookup.end() || !(it->second->energy == mapped.energy)) {
          ok = false;
          break;
        }
      }
      if (!ok) break;
    }
    push(out, "action/energy-permutation",
         "g E_{r',nu}^k = E_{r',eps_k nu}^{lk} exactly, all 384 g", ok);
  }
  {
    bool ok = true;
    const auto records = fullSpectrum();
    for (const WreathElement& g : group) {
      // k = 0 objects are rational; the action must fix them.
      for (const auto& rec : records) {
        if (rec.k != 0) continue;
        SpectrumRecord mapped = actOnRecord(g, rec);
        ok = ok && mapped.k == 0 && mapped.energy == rec.energy && mapped.nu == rec.nu;
      }
      if (!ok) break;
    }
    MatC p0 = projectorBlock(2, 2, 0);
    MatQuadC rho0 = densityMatrices(3, 3, 0).plus;
    const WreathElement sample = group[123];
    ok = ok && sameMat<CycNum>(actOnMatrix<CycNum>(sample, p0), p0);
    ok = ok && sameMat<QuadCyc>(actOnMatrix<QuadCyc>(sample, rho0), rho0);
    push(out, "action/k0-fixed", "the Galois group fixes every k = 0 object", ok);
  }
  {
    bool ok = true;
    std::uniform_int_distribution<size_t> pick(0, group.size() - 1);
    for (int i = 0; i < 200 && ok; ++i) {
      const WreathElement& g = group[pick(rng())];
      VecC a(3), b(3);
      for (int j = 0; j < 3; ++j) {
        a(j) = randomCyc();
        b(j) = randomCyc();
      }
      CycNum inner = 0;
      for (int j = 0; j < 3; ++j) inner += a(j).conj() * b(j);
      CycNum mappedInner = 0;
      for (int j = 0; j < 3; ++j)
        mappedInner += actOnElement(g, a(j)).conj() * actOnElement(g, b(j));
      ok = mappedInner == actOnElement(g, inner);
    }
    push(out, "action/equivariance", "<theta_g a, theta_g b> = g <a, b>", ok);
  }
  {
    bool ok = true;
    std::uniform_int_distribution<size_t> pick(0, group.size() - 1);
    for (int i = 0; i < 100 && ok; ++i) {
      const WreathElement& g = group[pick(rng())];
      MatC m(3, 3);
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) m(a, b) = randomCyc();
      ok = sameMat<CycNum>(dagger<CycNum>(actOnMatrix<CycNum>(g, m)),
                           actOnMatrix<CycNum>(g, dagger<CycNum>(m)));
      DiscTag tag = allDiscTags()[size_t(i % 6)];
      MatQuadC q(2, 2);
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) q(a, b) = QuadCyc(randomCyc(), randomCyc(), tag);
      ok = ok && sameMat<QuadCyc>(dagger<QuadCyc>(actOnMatrix<QuadCyc>(g, q)),
                                  actOnMatrix<QuadCyc>(g, dagger<QuadCyc>(q)));
    }
    push(out, "action/dagger-commutes", "(Theta_g A)^dag = Theta_g (A^dag)", ok);
  }
  {
    // Numeric side conditions: embeddings are multiplicative (1e-12 on
    // unit-scale inputs) and reproduce the exact identities.
    bool ok = true;
    for (int i = 0; i < 50 && ok; ++i) {
      std::uniform_int_distribution<long> unit(-1, 1);
      std::array<Rat, 6> ca, cb;
      for (int j = 0; j < 6; ++j) {
        ca[size_t(j)] = ratOf(unit(rng()), 4);
        cb[size_t(j)] = ratOf(unit(rng()), 4);
      }
      CycNum a{ca}, b{cb};
      for (int l = 1; l <= 6; ++l) {
        auto e = CycAut(l);
        auto dev = std::abs(numericEmbed(a * b, e) - numericEmbed(a, e) * numericEmbed(b, e));
        ok = ok && dev <= 1e-12;
      }
      CycNum big = randomCyc(), big2 = randomCyc();
      auto dev = std::abs(numericEmbed(big * big2) - numericEmbed(big) * numericEmbed(big2));
      ok = ok && dev <= 1e-9;  // coefficients up to +-20 scale the error
    }
    double rho = numericEmbedReal(RhoNum::rho());
    ok = ok && std::abs(rho - 2 * std::cos(2 * std::numbers::pi / 7)) <= 1e-12;
    ok = ok && std::abs(numericEmbedReal(RhoNum::rho() * RhoNum::rho() * RhoNum::rho()) -
                        (1 + 2 * rho - rho * rho)) <= 1e-12;
    ok = ok && std::abs(numericEmbedReal(discriminantRho(DiscTag(2, 1))) -
                        (16 - rho - 3 * rho * rho)) <= 1e-12;
    push(out, "field/numeric-embedding",
         "numeric embeddings are multiplicative and match the exact identities", ok);
  }
  return out;
}

}  // namespace

VerifyReport verifySection(int section) {
  VerifyReport report;
  switch (section) {
    case 2: report.checks = section2(); break;
    case 3: report.checks = section3(); break;
    case 4: report.checks = section4(); break;
    case 5: report.checks = section5(); break;
    case 6: report.checks = section6(); break;
    case 7: report.checks = section7(); break;
    default: throw std::domain_error("verify sections are 2..7");
  }
  return report;
}

VerifyReport verifyAll() {
  VerifyReport report;
  for (int s = 2; s <= 7; ++s) {
    auto part = verifySection(s).checks;
    report.checks.insert(report.checks.end(), part.begin(), part.end());
  }
  return report;
}

}  // namespace hepta
