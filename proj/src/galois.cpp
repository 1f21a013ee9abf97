#include "hepta/galois.hpp"

#include <stdexcept>

#include "hepta/numeric.hpp"

namespace hepta {

bool variantIsReal(WreathVariant v) {
  return v == WreathVariant::RealQubitRow || v == WreathVariant::RealTotal;
}

bool variantSingleRow(WreathVariant v) {
  return v == WreathVariant::RealQubitRow || v == WreathVariant::ComplexQubitRow;
}

long variantOrder(WreathVariant v) {
  long signs = variantSingleRow(v) ? 8 : 64;
  long cyc = variantIsReal(v) ? 3 : 6;
  return signs * cyc;
}

namespace {

const int kClassValues[3] = {1, 2, 4};

void checkElement(const WreathElement& g) {
  if (g.l < 1 || g.l > 6) throw std::domain_error("cyclic index out of range");
  if (variantIsReal(g.variant) && g.l != 1 && g.l != 2 && g.l != 4)
    throw std::domain_error("real-tower variant requires l in {1,2,4}");
  for (const auto& row : g.eps)
    for (int s : row)
      if (s != 1 && s != -1) throw std::domain_error("signs must be +-1");
  if (variantSingleRow(g.variant) && g.eps[0] != g.eps[1])
    throw std::domain_error("single-row variant requires equal sign rows");
}

int phiClass(int l) { return kClassOf(l); }  // the square-class map C6 -> C3

}  // namespace

int epsColumn(int kClass) {
  switch (kClass) {
    case 1: return 0;
    case 2: return 1;
    case 4: return 2;
    default: throw std::domain_error("k-class must be 1, 2 or 4");
  }
}

WreathElement wreathIdentity(WreathVariant v) {
  WreathElement e;
  e.variant = v;
  return e;
}

WreathElement wreathMul(const WreathElement& g, const WreathElement& h) {
  if (g.variant != h.variant) throw std::domain_error("wreath variant mismatch");
  checkElement(g);
  checkElement(h);
  WreathElement out;
  out.variant = g.variant;
  out.l = (g.l * h.l) % 7;
  const int shift = phiClass(h.l);
  for (int row = 0; row < 2; ++row)
    for (int col = 0; col < 3; ++col) {
      int shifted = (kClassValues[col] * shift) % 7;  // stays in {1,2,4}
      out.eps[size_t(row)][size_t(col)] =
          g.eps[size_t(row)][size_t(epsColumn(shifted))] * h.eps[size_t(row)][size_t(col)];
    }
  return out;
}

WreathElement wreathInverse(const WreathElement& g) {
  checkElement(g);
  WreathElement inv;
  inv.variant = g.variant;
  inv.l = CycAut(g.l).inverse().index();
  const int shift = phiClass(inv.l);
  for (int row = 0; row < 2; ++row)
    for (int col = 0; col < 3; ++col) {
      int shifted = (kClassValues[col] * shift) % 7;
      inv.eps[size_t(row)][size_t(col)] = g.eps[size_t(row)][size_t(epsColumn(shifted))];
    }
  return inv;
}

std::vector<WreathElement> enumerateGroup(WreathVariant v) {
  std::vector<int> cyc = variantIsReal(v) ? std::vector<int>{1, 2, 4}
                                          : std::vector<int>{1, 2, 3, 4, 5, 6};
  std::vector<WreathElement> out;
  const int rows = variantSingleRow(v) ? 1 : 2;
  const int patterns = 1 << (3 * rows);
  for (int l : cyc) {
    for (int p = 0; p < patterns; ++p) {
      WreathElement g;
      g.variant = v;
      g.l = l;
      for (int b = 0; b < 3 * rows; ++b) {
        int row = b / 3, col = b % 3;
        g.eps[size_t(row)][size_t(col)] = (p >> b) & 1 ? -1 : 1;
      }
      if (rows == 1) g.eps[1] = g.eps[0];
      out.push_back(g);
    }
  }
  return out;
}

int signFor(const WreathElement& g, DiscTag tag) {
  return g.eps[size_t(tag.rPrime - 2)][size_t(epsColumn(tag.kClass))];
}

RhoNum actOnElement(const WreathElement& g, const RhoNum& x) {
  return applyAut(CycAut(g.l), x);
}

CycNum actOnElement(const WreathElement& g, const CycNum& x) {
  if (variantIsReal(g.variant))
    throw std::domain_error("real-tower group does not act on Q(w)");
  return applyAut(CycAut(g.l), x);
}

namespace {

template <class Base>
QuadNum<Base> actQuad(const WreathElement& g, const QuadNum<Base>& x,
                      Base (*aut)(CycAut, const Base&)) {
  CycAut t(g.l);
  if (!x.hasRoot()) return QuadNum<Base>(aut(t, x.base()));
  DiscTag src = *x.tag();
  DiscTag dst(src.rPrime, kClassOf(g.l * src.kClass));
  Base b = aut(t, x.rootCoeff());
  if (signFor(g, src) < 0) b = -b;
  return QuadNum<Base>(aut(t, x.base()), b, dst);
}

RhoNum autRho(CycAut t, const RhoNum& x) { return applyAut(t, x); }
CycNum autCyc(CycAut t, const CycNum& x) { return applyAut(t, x); }

}  // namespace

QuadRho actOnElement(const WreathElement& g, const QuadRho& x) {
  return actQuad<RhoNum>(g, x, autRho);
}

QuadCyc actOnElement(const WreathElement& g, const QuadCyc& x) {
  if (variantIsReal(g.variant))
    throw std::domain_error("real-tower group does not act on Q(w, sqrt(D))");
  return actQuad<CycNum>(g, x, autCyc);
}

SpectrumRecord actOnRecord(const WreathElement& g, const SpectrumRecord& rec) {
  SpectrumRecord out = rec;
  out.k = brillouinRep(g.l * rec.k);
  if (rec.nu && rec.k != 0) {
    DiscTag src(rec.rPrime, kClassOf(rec.k));
    out.nu = signFor(g, src) * *rec.nu;
  }
  out.energy = actOnElement(g, rec.energy);
  out.energyFloat = numericEmbedReal(out.energy);
  return out;
}

std::vector<SubfieldNode> cyclotomicLattice() {
  return {
      {"Q", {}, 1, {}},
      {"Q(eta)", {"eta = i sqrt(7)"}, 2, {"Q"}},
      {"Q(rho)", {"rho = w + w^-1"}, 3, {"Q"}},
      {"Q(w)", {"w = exp(2 pi i / 7)"}, 6, {"Q(eta)", "Q(rho)"}},
  };
}

std::vector<SubfieldNode> heisenbergLattice(bool complexTower) {
  const std::string x = complexTower ? "G" : "E";
  const std::string base = complexTower ? "Q(w)" : "Q(rho)";
  const long baseDeg = complexTower ? 6 : 3;
  std::vector<SubfieldNode> nodes;
  if (complexTower) {
    for (const auto& n : cyclotomicLattice()) nodes.push_back(n);
  } else {
    nodes.push_back({"Q", {}, 1, {}});
    nodes.push_back({"Q(rho)", {"rho = w + w^-1"}, 3, {"Q"}});
  }
  for (int rp : {2, 3}) {
    for (int kc : {1, 2, 4}) {
      DiscTag tag(rp, kc);
      nodes.push_back({"H_{" + std::to_string(rp) + "," + x + "}^" + std::to_string(kc),
                       {"sqrt(" + tag.name() + ")"},
                       2 * baseDeg,
                       {base}});
    }
    std::vector<std::string> parents;
    for (int kc : {1, 2, 4})
      parents.push_back("H_{" + std::to_string(rp) + "," + x + "}^" + std::to_string(kc));
    nodes.push_back({"H_{" + std::to_string(rp) + "," + x + "}",
                     {"all sqrt(Delta_" + std::to_string(rp) + "^k)"},
                     8 * baseDeg,
                     parents});
  }
  nodes.push_back({"H_" + x,
                   {"all six sqrt(Delta_{r'}^k)"},
                   64 * baseDeg,
                   {"H_{2," + x + "}", "H_{3," + x + "}"}});
  return nodes;
}

}  // namespace hepta
