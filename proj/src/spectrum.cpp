#include "hepta/spectrum.hpp"

#include <algorithm>

#include "hepta/numeric.hpp"

namespace hepta {

std::array<long, 4> highestWeightDims() {
  std::array<long, 4> dims{};
  dims[0] = 1;  // the vacuum
  for (int rp = 1; rp <= 3; ++rp) {
    // ker(S^+ | level rp) has dimension C(7,rp) - rank(S^-|_{rp-1}).
    long rank = rankOf<Rat>(sMinusMatrix(rp - 1));
    dims[size_t(rp)] = binomial7(rp) - rank;
  }
  return dims;
}

std::vector<SpectrumRecord> fullSpectrum() {
  std::vector<SpectrumRecord> records;
  for (int k = -3; k <= 3; ++k) {
    for (int rPrime = 0; rPrime <= 3; ++rPrime) {
      const bool zone0 = k == 0;
      if (rPrime == 0 && !zone0) continue;
      if (rPrime == 1 && zone0) continue;
      auto [ePlus, eMinus] = energiesAt(rPrime, k);
      const int mult = 8 - 2 * rPrime;  // level occurs for r = r'..7-r'
      auto add = [&](std::optional<int> nu, const QuadRho& e) {
        SpectrumRecord rec;
        rec.k = k;
        rec.r = rPrime;
        rec.rPrime = rPrime;
        rec.nu = nu;
        rec.energy = e;
        rec.energyFloat = numericEmbedReal(e);
        rec.multiplicity = mult;
        records.push_back(std::move(rec));
      };
      if (rPrime <= 1) {
        add(std::nullopt, ePlus);
      } else {
        add(+1, ePlus);
        add(-1, eMinus);
      }
    }
  }
  return records;
}

std::vector<double> numericSpectrum() {
  std::vector<double> values;
  values.reserve(128);
  for (const auto& rec : fullSpectrum())
    values.insert(values.end(), size_t(rec.multiplicity), rec.energyFloat);
  std::sort(values.begin(), values.end());
  return values;
}

}  // namespace hepta
