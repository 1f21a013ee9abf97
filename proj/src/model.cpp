#include "hepta/model.hpp"

#include <stdexcept>

namespace hepta {

namespace {

int ringNext(int node) { return node == kRingSize ? 1 : node + 1; }
int ringPrev(int node) { return node == 1 ? kRingSize : node - 1; }

}  // namespace

MatQ hamiltonianArith(int r) {
  auto level = buildConfigs(r);
  const int n = int(level.size());
  MatQ h = MatQ::Zero(n, n);
  for (int ci = 0; ci < n; ++ci) {
    const Config c = level[size_t(ci)];
    for (int node = 1; node <= kRingSize; ++node) {
      if (!c.occupied(node)) continue;
      for (int dst : {ringNext(node), ringPrev(node)}) {
        if (c.occupied(dst)) continue;
        Config moved{c.mask ^ (1u << (node - 1)) ^ (1u << (dst - 1))};
        h(configIndex(level, moved), ci) += 1;
        h(ci, ci) -= 1;
      }
    }
  }
  return h;
}

MatQ sMinusMatrix(int r) {
  if (r < 0 || r >= kRingSize) throw std::domain_error("sMinusMatrix needs 0 <= r < 7");
  auto lower = buildConfigs(r);
  auto upper = buildConfigs(r + 1);
  MatQ s = MatQ::Zero(Eigen::Index(upper.size()), Eigen::Index(lower.size()));
  for (int ci = 0; ci < int(lower.size()); ++ci) {
    const Config c = lower[size_t(ci)];
    for (int node = 1; node <= kRingSize; ++node) {
      if (c.occupied(node)) continue;
      Config raised{c.mask | (1u << (node - 1))};
      s(configIndex(upper, raised), ci) += 1;
    }
  }
  return s;
}

VecC waveletVector(int r, const Orbit& orbit, int k) {
  auto level = buildConfigs(r);
  VecC v = VecC::Zero(Eigen::Index(level.size()));
  if (orbit.size == 1) {
    if (brillouinRep(k) != 0)
      throw std::domain_error("size-1 orbit carries only k = 0");
    v(configIndex(level, orbit.memberAt(1))) = CycNum(1);
    return v;
  }
  for (int j = 1; j <= kRingSize; ++j)
    v(configIndex(level, orbit.memberAt(j))) = CycNum::omegaPow(-long(k) * j);
  return v;
}

std::vector<Orbit> orbitsAtMomentum(int r, int k) {
  std::vector<Orbit> out;
  for (const Orbit& o : buildOrbits(r))
    if (o.size == kRingSize || brillouinRep(k) == 0) out.push_back(o);
  return out;
}

namespace {

// Coefficient of |G,t,k> in a vector expressed in the configuration basis:
// (1/7) sum_j w^{+kj} v[member_j] for regular orbits, the bare entry for
// size-1 orbits.
CycNum waveletCoefficient(const std::vector<Config>& level, const Orbit& orbit,
                          int k, const VecC& v) {
  if (orbit.size == 1) return v(configIndex(level, orbit.memberAt(1)));
  CycNum acc = 0;
  for (int j = 1; j <= kRingSize; ++j)
    acc += CycNum::omegaPow(long(k) * j) * v(configIndex(level, orbit.memberAt(j)));
  return acc * CycNum(ratOf(1, 7));
}

MatC applyInWavelets(const MatC& opConfig, int rFrom, int rTo, int k) {
  auto levelTo = buildConfigs(rTo);
  auto from = orbitsAtMomentum(rFrom, k);
  auto to = orbitsAtMomentum(rTo, k);
  MatC block(Eigen::Index(to.size()), Eigen::Index(from.size()));
  for (int s = 0; s < int(from.size()); ++s) {
    VecC image = opConfig * waveletVector(rFrom, from[size_t(s)], k);
    for (int t = 0; t < int(to.size()); ++t)
      block(t, s) = waveletCoefficient(levelTo, to[size_t(t)], k, image);
  }
  return block;
}

}  // namespace

MatC fourierBlock(int r, int k) {
  MatC h = castMat<Rat, CycNum>(hamiltonianArith(r));
  return applyInWavelets(h, r, r, k);
}

MatC sBlock(int r, int dr, int k) {
  if (dr < 1 || r + dr > kRingSize) throw std::domain_error("sBlock out of range");
  MatC op = castMat<Rat, CycNum>(sMinusMatrix(r));
  for (int i = 1; i < dr; ++i)
    op = castMat<Rat, CycNum>(sMinusMatrix(r + i)) * op;
  return applyInWavelets(op, r, r + dr, k);
}

std::vector<std::pair<int, int>> waveletColumns(int r) {
  auto orbits = buildOrbits(r);
  std::vector<std::pair<int, int>> cols;
  for (int k = -3; k <= 3; ++k)
    for (int oi = 0; oi < int(orbits.size()); ++oi)
      if (orbits[size_t(oi)].size == kRingSize || k == 0)
        cols.emplace_back(k, oi);
  return cols;
}

MatC waveletBasis(int r) {
  auto level = buildConfigs(r);
  auto orbits = buildOrbits(r);
  auto cols = waveletColumns(r);
  MatC w(Eigen::Index(level.size()), Eigen::Index(cols.size()));
  for (int j = 0; j < int(cols.size()); ++j)
    w.col(j) = waveletVector(r, orbits[size_t(cols[size_t(j)].second)], cols[size_t(j)].first);
  return w;
}

MatC waveletBasisInverse(int r) {
  auto level = buildConfigs(r);
  auto orbits = buildOrbits(r);
  auto cols = waveletColumns(r);
  MatC winv = MatC::Zero(Eigen::Index(cols.size()), Eigen::Index(level.size()));
  for (int i = 0; i < int(cols.size()); ++i) {
    auto [k, oi] = cols[size_t(i)];
    const Orbit& o = orbits[size_t(oi)];
    if (o.size == 1) {
      winv(i, configIndex(level, o.memberAt(1))) = CycNum(1);
      continue;
    }
    for (int j = 1; j <= kRingSize; ++j)
      winv(i, configIndex(level, o.memberAt(j))) =
          CycNum::omegaPow(long(k) * j) * CycNum(ratOf(1, 7));
  }
  return winv;
}

}  // namespace hepta
