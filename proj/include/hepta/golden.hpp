#pragma once

#include "hepta/eigen_support.hpp"

// Known closed forms of the momentum blocks, spin operators, qubit
// Hamiltonians and discriminants (xi = w^k, mu_l = xi^l + xi^-l). Golden
// test data only: the library derives everything generically and the
// verify suite compares the two entrywise.

namespace hepta {
namespace golden {

MatC block1(int k);  // [ -2 + xi + xi^-1 ]
MatC block2(int k);  // 3x3, rows/cols (1,6), (2,5), (3,4)
MatC block3(int k);  // 5x5, lexicographic orbit order
MatC s11(int k);     // 3x1
MatC s21(int k);     // 5x3

MatR qubit2(int k);  // [[-mu, 2-mu], [2+mu, mu4]] - 4I
MatR qubit3(int k);  // [[-3-mu4, -1+mu2-2mu4], [1+mu2, 1+mu2]] - 4I

// Characteristic polynomial data in X = x + 4.
RhoNum shiftedTrace(int rPrime, int k);  // 1-2mu-mu^2 | -5+mu+2mu^2
RhoNum shiftedDet(int rPrime, int k);    // -3+mu+mu^2 | mu-2mu^2
RhoNum discriminant2(int kClass);        // 16-r-3r^2, 9+3r+2r^2, 9-2r+r^2
RhoNum discriminant3(int kClass);        // 25-10r-3r^2, 36+3r-7r^2, 9+7r+10r^2

}  // namespace golden
}  // namespace hepta
