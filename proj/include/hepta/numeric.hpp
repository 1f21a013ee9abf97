#pragma once

#include <complex>

#include "hepta/quadratic.hpp"

// Floating-point embeddings of the exact fields. The embedding tau_l sends
// w -> exp(2*pi*i*l/7); square roots of embedded discriminants take the
// principal (positive) branch, which is well defined because all six
// discriminants are totally positive.

namespace hepta {

std::complex<double> numericEmbed(const CycNum& x, CycAut e = CycAut());
double numericEmbedReal(const RhoNum& x, CycAut e = CycAut());
std::complex<double> numericEmbed(const RhoNum& x, CycAut e = CycAut());
double numericEmbedReal(const QuadRho& x, CycAut e = CycAut());
std::complex<double> numericEmbed(const QuadCyc& x, CycAut e = CycAut());

}  // namespace hepta
