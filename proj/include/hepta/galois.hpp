#pragma once

#include <array>
#include <string>
#include <vector>

#include "hepta/number_theory.hpp"
#include "hepta/spectrum.hpp"

// The Galois groups of the Heisenberg field tower as wreath products of
// sign flips sqrt(D_{r'}^k) -> -sqrt(D_{r'}^k) with the cyclic part tau_l,
// their actions on field elements, operators and the spectrum, and the
// subfield lattices.

namespace hepta {

enum class WreathVariant {
  RealQubitRow,    // C2 wr C3, order 24: one sign row, l in {1,2,4}
  RealTotal,       // (C2xC2) wr C3, order 192: two sign rows, l in {1,2,4}
  ComplexQubitRow, // C2 wr_phi C6, order 48: one sign row, l any unit mod 7
  ComplexTotal     // (C2xC2) wr_phi C6, order 384
};

bool variantIsReal(WreathVariant v);
bool variantSingleRow(WreathVariant v);
long variantOrder(WreathVariant v);

struct WreathElement {
  WreathVariant variant = WreathVariant::ComplexTotal;
  // eps[row][col]: row 0 <-> r' = 2, row 1 <-> r' = 3; col 0,1,2 <-> k-class
  // 1,2,4. Single-row variants keep the two rows identical.
  std::array<std::array<int, 3>, 2> eps{{{1, 1, 1}, {1, 1, 1}}};
  int l = 1;  // unit mod 7 in 1..6 ({1,2,4} for the real variants)

  friend bool operator==(const WreathElement&, const WreathElement&) = default;
};

WreathElement wreathIdentity(WreathVariant v);
// Composition law: the cyclic parts multiply, and the left sign row is
// shifted by the square class of the right cyclic part before multiplying
// componentwise.
WreathElement wreathMul(const WreathElement& g, const WreathElement& h);
WreathElement wreathInverse(const WreathElement& g);
std::vector<WreathElement> enumerateGroup(WreathVariant v);

int epsColumn(int kClass);              // 1,2,4 -> 0,1,2
int signFor(const WreathElement& g, DiscTag tag);  // source-indexed sign

// Field automorphism semantics: tau_l on coefficients, tag class k -> class
// of l*k, root sign multiplied by eps at the source tag.
RhoNum actOnElement(const WreathElement& g, const RhoNum& x);
CycNum actOnElement(const WreathElement& g, const CycNum& x);
QuadRho actOnElement(const WreathElement& g, const QuadRho& x);
QuadCyc actOnElement(const WreathElement& g, const QuadCyc& x);

template <class F>
Mat<F> actOnMatrix(const WreathElement& g, const Mat<F>& m) {
  Mat<F> out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = actOnElement(g, m(i, j));
  return out;
}

// Induced relabeling of a level family: k -> lk (Brillouin representative),
// nu -> eps_{r',class(k)} nu for r' = 2,3 and k != 0.
SpectrumRecord actOnRecord(const WreathElement& g, const SpectrumRecord& rec);

struct SubfieldNode {
  std::string name;
  std::vector<std::string> generators;
  long degreeOverQ = 1;
  std::vector<std::string> parents;  // immediate subfields
};

std::vector<SubfieldNode> cyclotomicLattice();
std::vector<SubfieldNode> heisenbergLattice(bool complexTower);

}  // namespace hepta
