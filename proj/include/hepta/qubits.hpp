#pragma once

#include <utility>
#include <vector>

#include "hepta/model.hpp"

// Highest-weight (qubit) reductions of the momentum blocks: explicit bases,
// the 2x2 Hamiltonians over Q(rho), characteristic polynomials and
// discriminants, exact energies, projectors and density matrices.

namespace hepta {

// Basis of the highest-weight space of H_{r'}^k in block coordinates:
// dimension 1 for r' = 0 (k = 0) and r' = 1 (k != 0), dimension 2 for
// r' = 2, 3 (any k). For r' = 2, 3 these are the explicit qubit bases; at
// k = 0 they are eigenvectors.
MatC highestWeightMatrix(int rPrime, int k);

// Same space computed generically as the kernel of S^+ restricted to the
// block (the cross-check path; spans must agree with the explicit basis).
MatC highestWeightKernel(int rPrime, int k);

// 2x2 matrix of H_{r',r'}^k in the explicit basis, entries in Q(rho)
// (polynomials in mu = rho_k). Requires r' in {2,3}, k != 0.
MatR qubitHamiltonian(int rPrime, int k);

// Characteristic polynomial in the shifted variable X = x + 4:
// X^2 - trace X + det, with discriminant trace^2 - 4 det.
struct ShiftedCharPoly {
  RhoNum trace;
  RhoNum det;
  RhoNum disc;
};
ShiftedCharPoly charpolyDisc(int rPrime, int k);

// Exact energies (nu = +1 first). Levels with a single energy return it
// twice (r' <= 1, and the doubly degenerate r' = 3, k = 0).
std::pair<QuadRho, QuadRho> energiesAt(int rPrime, int k);

// Orthogonal projector onto phi_{r,r'}^k inside the momentum block, built
// by a Gram solve on the lifted highest-weight basis. Exact.
MatC projectorBlock(int r, int rPrime, int k);

struct DensityPair {
  MatQuadC plus;   // nu = +1
  MatQuadC minus;  // nu = -1
};

// Exact rank-one eigenprojectors of the (r, r') level at momentum k,
// entries in Q(w, sqrt(D_{r'}^k)); at k = 0 built from the explicit
// eigenvectors. Requires r' in {2,3}.
DensityPair densityMatrices(int r, int rPrime, int k);

}  // namespace hepta
