#include "hepta/quadratic.hpp"

namespace hepta {

const std::array<DiscTag, 6>& allDiscTags() {
  static const std::array<DiscTag, 6> tags = {
      DiscTag(2, 1), DiscTag(2, 2), DiscTag(2, 4),
      DiscTag(3, 1), DiscTag(3, 2), DiscTag(3, 4)};
  return tags;
}

RhoNum discriminantRho(DiscTag tag) {
  RhoNum m = RhoNum::rhoConjugate(tag.kClass);
  if (tag.rPrime == 2) return RhoNum(16) - m - RhoNum(3) * m * m;
  return RhoNum(25) - RhoNum(10) * m - RhoNum(3) * m * m;
}

}  // namespace hepta
