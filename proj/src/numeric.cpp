#include "hepta/numeric.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hepta {

namespace {
std::complex<double> omegaAt(int l) {
  const double arg = 2.0 * std::numbers::pi * l / 7.0;
  return {std::cos(arg), std::sin(arg)};
}
}  // namespace

std::complex<double> numericEmbed(const CycNum& x, CycAut e) {
  std::complex<double> w = omegaAt(e.index());
  std::complex<double> acc = 0.0, p = 1.0;
  for (int i = 0; i < 6; ++i) {
    acc += ratToDouble(x.coeff(i)) * p;
    p *= w;
  }
  return acc;
}

double numericEmbedReal(const RhoNum& x, CycAut e) {
  const double r = 2.0 * std::cos(2.0 * std::numbers::pi * e.index() / 7.0);
  return ratToDouble(x.coeff(0)) + ratToDouble(x.coeff(1)) * r +
         ratToDouble(x.coeff(2)) * r * r;
}

std::complex<double> numericEmbed(const RhoNum& x, CycAut e) {
  return {numericEmbedReal(x, e), 0.0};
}

namespace {
double rootValue(DiscTag tag, CycAut e) {
  double delta = numericEmbedReal(discriminantRho(tag), e);
  if (delta < 0)
    throw std::domain_error("embedded discriminant is negative: " + tag.name());
  return std::sqrt(delta);
}
}  // namespace

double numericEmbedReal(const QuadRho& x, CycAut e) {
  double v = numericEmbedReal(x.base(), e);
  if (x.hasRoot()) v += numericEmbedReal(x.rootCoeff(), e) * rootValue(*x.tag(), e);
  return v;
}

std::complex<double> numericEmbed(const QuadCyc& x, CycAut e) {
  std::complex<double> v = numericEmbed(x.base(), e);
  if (x.hasRoot()) v += numericEmbed(x.rootCoeff(), e) * rootValue(*x.tag(), e);
  return v;
}

}  // namespace hepta
