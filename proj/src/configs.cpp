#include "hepta/configs.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace hepta {

std::vector<int> Config::positions() const {
  std::vector<int> p;
  for (int node = 1; node <= kRingSize; ++node)
    if (occupied(node)) p.push_back(node);
  return p;
}

Config Config::translated(int shift) const {
  int s = ((shift % kRingSize) + kRingSize) % kRingSize;
  unsigned m = mask & 0x7Fu;
  return Config{((m << s) | (m >> (kRingSize - s))) & 0x7Fu};
}

Config Orbit::memberAt(int j) const {
  int jj = ((j - 1) % kRingSize + kRingSize) % kRingSize + 1;
  return member[size_t(jj)];
}

std::vector<Config> buildConfigs(int r) {
  if (r < 0 || r > kRingSize) throw std::domain_error("deviation count out of range");
  std::vector<Config> out;
  for (unsigned m = 0; m < 128; ++m)
    if (__builtin_popcount(m) == r) out.push_back(Config{m});
  return out;
}

namespace {

// Gap sequence read from an occupied node: distances to the next occupied
// node going clockwise, full circle.
std::vector<int> gapsFrom(const Config& c, int start) {
  std::vector<int> pos = c.positions();
  const int r = int(pos.size());
  auto it = std::find(pos.begin(), pos.end(), start);
  int i = int(it - pos.begin());
  std::vector<int> g(static_cast<size_t>(r), 0);
  for (int a = 0; a < r; ++a) {
    int cur = pos[size_t((i + a) % r)];
    int nxt = pos[size_t((i + a + 1) % r)];
    int d = nxt - cur;
    g[size_t(a)] = d > 0 ? d : d + kRingSize;
  }
  return g;
}

std::vector<int> canonicalT(const Config& c) {
  std::vector<int> best;
  for (int node : c.positions()) {
    auto g = gapsFrom(c, node);
    if (best.empty() || g < best) best = g;
  }
  return best;
}

int countIslands(const Config& c) {
  if (c.mask == 0) return 0;
  if (c.mask == 0x7Fu) return 1;
  int islands = 0;
  for (int node = 1; node <= kRingSize; ++node) {
    int prev = node == 1 ? kRingSize : node - 1;
    if (c.occupied(node) && !c.occupied(prev)) ++islands;
  }
  return islands;
}

}  // namespace

std::vector<Orbit> buildOrbits(int r) {
  auto level = buildConfigs(r);
  std::map<std::vector<int>, Orbit> orbits;
  for (const Config& c : level) {
    std::vector<int> t = r == 0 ? std::vector<int>{} : canonicalT(c);
    auto [it, inserted] = orbits.try_emplace(t);
    if (!inserted) continue;
    Orbit& o = it->second;
    o.t = t;
    o.islands = countIslands(c);
    if (r == 0 || r == kRingSize) {
      o.size = 1;
      for (int j = 1; j <= kRingSize; ++j) o.member[size_t(j)] = c;
    } else {
      o.size = kRingSize;
      // member j carries the anchor deviation at node j: occupied nodes are
      // the partial sums j, j+t1, j+t1+t2, ...
      for (int j = 1; j <= kRingSize; ++j) {
        unsigned m = 0;
        int node = j;
        for (int a = 0; a < r; ++a) {
          m |= 1u << ((node - 1) % kRingSize);
          node += t[size_t(a)];
        }
        o.member[size_t(j)] = Config{m};
      }
    }
  }
  std::vector<Orbit> out;
  out.reserve(orbits.size());
  for (auto& [t, o] : orbits) out.push_back(std::move(o));
  return out;  // std::map already gives lexicographic order on t
}

int configIndex(const std::vector<Config>& level, Config c) {
  auto it = std::lower_bound(level.begin(), level.end(), c);
  if (it == level.end() || !(*it == c))
    throw std::logic_error("configuration not in level");
  return int(it - level.begin());
}

int binomial7(int r) {
  static const int table[8] = {1, 7, 21, 35, 35, 21, 7, 1};
  if (r < 0 || r > 7) throw std::domain_error("binomial7 out of range");
  return table[r];
}

}  // namespace hepta
