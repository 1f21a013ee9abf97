#pragma once

#include <array>
#include <optional>
#include <vector>

#include "hepta/qubits.hpp"

namespace hepta {

// One energy level family (k, r', nu). The level occurs once in every
// deviation sector r = r'..7-r', so its multiplicity is 8 - 2r'; r records
// the highest-weight level the energy originates from (= r').
struct SpectrumRecord {
  int k = 0;
  int r = 0;
  int rPrime = 0;
  std::optional<int> nu;  // +1 / -1 for r' = 2, 3; empty otherwise
  QuadRho energy;
  double energyFloat = 0.0;
  int multiplicity = 0;

  friend bool operator==(const SpectrumRecord& a, const SpectrumRecord& b) {
    return a.k == b.k && a.r == b.r && a.rPrime == b.rPrime && a.nu == b.nu &&
           a.energy == b.energy && a.multiplicity == b.multiplicity;
  }
};

// All 35 level families, ordered by (k, r', -nu); multiplicities sum to 128.
std::vector<SpectrumRecord> fullSpectrum();

// dim of the highest-weight spaces for r' = 0..3, by exact rank of S^+
// restricted to each level: {1, 6, 14, 14}.
std::array<long, 4> highestWeightDims();

// The 128 exact energies embedded numerically, ascending (with multiplicity).
std::vector<double> numericSpectrum();

}  // namespace hepta
