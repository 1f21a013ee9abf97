#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <vector>

// Magnetic configurations on the 7-node ring and their C_7 orbits. Nodes
// are numbered 1..7; bit j-1 of the mask marks node j as an overturned
// spin. An orbit is named by the canonical relative-position vector t
// (lexicographically smallest cyclic rotation), and member j is the
// configuration whose gap sequence read from node j equals t.

namespace hepta {

inline constexpr int kRingSize = 7;

struct Config {
  unsigned mask = 0;

  int deviations() const { return __builtin_popcount(mask); }
  bool occupied(int node) const { return (mask >> (node - 1)) & 1u; }
  std::vector<int> positions() const;  // ascending, 1-based
  Config translated(int shift) const;  // node j -> j + shift (mod 7)
  Config complement() const { return Config{~mask & 0x7Fu}; }

  friend auto operator<=>(const Config&, const Config&) = default;
};

struct Orbit {
  std::vector<int> t;   // canonical relative positions; empty for r = 0
  int islands = 0;      // number of maximal runs of adjacent deviations
  int size = 1;         // 7, or 1 for r = 0 and r = 7
  std::array<Config, 8> member{};  // member[1..7]; all equal when size == 1

  Config memberAt(int j) const;  // j taken mod 7 into 1..7
};

// All C(7, r) configurations with r deviations, ascending by mask.
std::vector<Config> buildConfigs(int r);

// C_7 orbits of level r, ordered lexicographically by t.
std::vector<Orbit> buildOrbits(int r);

// Index of c within buildConfigs(r) order.
int configIndex(const std::vector<Config>& level, Config c);

int binomial7(int r);

}  // namespace hepta
