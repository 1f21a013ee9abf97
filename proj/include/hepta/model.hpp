#pragma once

#include <utility>
#include <vector>

#include "hepta/configs.hpp"
#include "hepta/eigen_support.hpp"

// The arithmetic Hamiltonian of the XXX ring, the spin-lowering operator,
// and the momentum blocks in the Galois wavelet basis
// |G,r,t,k> = sum_j w^{-kj} |member of t anchored at j>.
//
// Blocks are indexed by the canonical (lexicographic) orbit order; H acts
// on wavelets by H|G,t',k> = sum_t M(t,t') |G,t,k>, so columns are sources.

namespace hepta {

// Integer matrix of H_r in the configuration basis: off-diagonal 1 between
// configurations related by one deviation hopping to an adjacent empty
// node, diagonal minus the number of such hops.
MatQ hamiltonianArith(int r);

// 0/1 matrix of S^- from level r to level r+1.
MatQ sMinusMatrix(int r);

// Wavelet coefficient vector of |G,r,t,k> in the configuration basis.
// Size-1 orbits (r = 0, 7) carry only k = 0 and the vector is the bare
// configuration.
VecC waveletVector(int r, const Orbit& orbit, int k);

// Orbits of level r contributing a wavelet at momentum k.
std::vector<Orbit> orbitsAtMomentum(int r, int k);

// Block of H_r at quasimomentum k (entries in Q(w)).
MatC fourierBlock(int r, int k);

// Block of (S^-)^dr restricted to momentum k, mapping level r to r + dr.
MatC sBlock(int r, int dr, int k);

// Full Galois-Fourier change of basis at level r, columns grouped by
// k = -3..3, and its exact inverse (from the inverse orbit transform).
// Column labels returned alongside as (k, orbit index) pairs.
MatC waveletBasis(int r);
MatC waveletBasisInverse(int r);
std::vector<std::pair<int, int>> waveletColumns(int r);

}  // namespace hepta
