#include <doctest.h>

#include <map>
#include <set>

#include "hepta/json_io.hpp"
#include "hepta/spectrum.hpp"

using namespace hepta;

TEST_CASE("level families and multiplicity accounting") {
  auto records = fullSpectrum();
  REQUIRE(records.size() == 35);
  long total = 0;
  std::map<int, long> byWeight;
  for (const auto& rec : records) {
    CHECK(rec.multiplicity == 8 - 2 * rec.rPrime);
    CHECK(rec.r == rec.rPrime);
    total += rec.multiplicity;
    byWeight[rec.rPrime] += rec.multiplicity;
  }
  CHECK(total == 128);
  CHECK(byWeight[0] == 8);
  CHECK(byWeight[1] == 36);
  CHECK(byWeight[2] == 56);
  CHECK(byWeight[3] == 28);
  CHECK(highestWeightDims() == std::array<long, 4>{1, 6, 14, 14});
}

TEST_CASE("k = 0 levels and the k -> -k symmetry") {
  auto records = fullSpectrum();
  std::multiset<std::string> k0;
  for (const auto& rec : records)
    if (rec.k == 0) k0.insert(rec.energy.str());
  CHECK(k0 == std::multiset<std::string>{"0", "-2", "-6", "-5", "-5"});

  std::map<int, std::multiset<std::string>> byK;
  for (const auto& rec : records) byK[rec.k].insert(rec.energy.str());
  for (int k : {1, 2, 3}) CHECK(byK[k] == byK[-k]);
}

TEST_CASE("spectrum records round-trip through JSON") {
  for (const auto& rec : fullSpectrum()) {
    Json j = toJson(rec);
    SpectrumRecord back = recordFromJson(j);
    CHECK(back == rec);
    CHECK(back.energyFloat == doctest::Approx(rec.energyFloat).epsilon(1e-15));
  }
  Json arr = spectrumToJson();
  CHECK(arr.size() == 35);
}
