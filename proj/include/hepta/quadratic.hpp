#pragma once

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>

#include "hepta/cyclotomic.hpp"

// Tagged quadratic extensions a + b*sqrt(D) over Q(rho) or Q(w), where D is
// one of the six qubit discriminants D_{r'}^k. The root stays symbolic: the
// tag names the discriminant, and mixed-tag arithmetic is rejected (the
// 64-dimensional composite field is never materialized).

namespace hepta {

struct DiscTag {
  int rPrime;  // 2 or 3
  int kClass;  // 1, 2 or 4

  DiscTag(int rp, int kc) : rPrime(rp), kClass(kc) {
    if ((rp != 2 && rp != 3) || (kc != 1 && kc != 2 && kc != 4))
      throw std::domain_error("bad discriminant tag");
  }
  std::string name() const {
    return "Delta_" + std::to_string(rPrime) + "^" + std::to_string(kClass);
  }
  friend bool operator==(const DiscTag& a, const DiscTag& b) {
    return a.rPrime == b.rPrime && a.kClass == b.kClass;
  }
  friend bool operator!=(const DiscTag& a, const DiscTag& b) { return !(a == b); }
  friend bool operator<(const DiscTag& a, const DiscTag& b) {
    return a.rPrime != b.rPrime ? a.rPrime < b.rPrime : a.kClass < b.kClass;
  }
};

// The six tags in canonical order: Delta_2^1, Delta_2^2, Delta_2^4,
// Delta_3^1, Delta_3^2, Delta_3^4.
const std::array<DiscTag, 6>& allDiscTags();

// D_2^k = 16 - m - 3m^2, D_3^k = 25 - 10m - 3m^2 with m = rho_k.
RhoNum discriminantRho(DiscTag tag);

namespace detail {
template <class Base>
Base discriminantAs(DiscTag tag);
template <>
inline RhoNum discriminantAs<RhoNum>(DiscTag tag) { return discriminantRho(tag); }
template <>
inline CycNum discriminantAs<CycNum>(DiscTag tag) { return embed(discriminantRho(tag)); }
}  // namespace detail

struct TagMismatch : std::domain_error {
  TagMismatch() : std::domain_error("quadratic extension tag mismatch") {}
};

template <class Base>
class QuadNum {
 public:
  QuadNum() = default;
  QuadNum(long n) : a_(n) {}  // NOLINT: implicit by design
  QuadNum(const Rat& q) : a_(q) {}
  QuadNum(Base base) : a_(std::move(base)) {}
  QuadNum(Base base, Base rootCoeff, DiscTag tag)
      : a_(std::move(base)), b_(std::move(rootCoeff)) {
    if (!b_.isZero()) tag_ = tag;
  }

  const Base& base() const { return a_; }
  const Base& rootCoeff() const { return b_; }
  const std::optional<DiscTag>& tag() const { return tag_; }
  bool isZero() const { return a_.isZero() && b_.isZero(); }
  bool hasRoot() const { return tag_.has_value(); }

  // sqrt(D) -> -sqrt(D)
  QuadNum quadConj() const {
    return b_.isZero() ? *this : QuadNum(a_, -b_, *tag_);
  }

  QuadNum inverse() const {
    if (isZero()) throw std::domain_error("division by zero in quadratic extension");
    if (!hasRoot()) return QuadNum(Base(1) / a_);
    Base delta = detail::discriminantAs<Base>(*tag_);
    Base den = a_ * a_ - delta * b_ * b_;
    if (den.isZero()) throw std::logic_error("sqrt(D) behaved as a base-field element");
    return QuadNum(a_ / den, -(b_ / den), *tag_);
  }

  friend QuadNum operator+(const QuadNum& x, const QuadNum& y) {
    auto tag = mergedTag(x, y);
    Base b = x.b_ + y.b_;
    if (b.isZero() || !tag) return QuadNum(x.a_ + y.a_);
    return QuadNum(x.a_ + y.a_, b, *tag);
  }
  friend QuadNum operator-(const QuadNum& x, const QuadNum& y) { return x + (-y); }
  QuadNum operator-() const {
    return hasRoot() ? QuadNum(-a_, -b_, *tag_) : QuadNum(-a_);
  }
  friend QuadNum operator*(const QuadNum& x, const QuadNum& y) {
    auto tag = mergedTag(x, y);
    if (!tag) return QuadNum(x.a_ * y.a_);
    Base delta = detail::discriminantAs<Base>(*tag);
    Base a = x.a_ * y.a_ + delta * x.b_ * y.b_;
    Base b = x.a_ * y.b_ + x.b_ * y.a_;
    if (b.isZero()) return QuadNum(a);
    return QuadNum(a, b, *tag);
  }
  friend QuadNum operator/(const QuadNum& x, const QuadNum& y) { return x * y.inverse(); }

  QuadNum& operator+=(const QuadNum& y) { return *this = *this + y; }
  QuadNum& operator-=(const QuadNum& y) { return *this = *this - y; }
  QuadNum& operator*=(const QuadNum& y) { return *this = *this * y; }
  QuadNum& operator/=(const QuadNum& y) { return *this = *this / y; }

  friend bool operator==(const QuadNum& x, const QuadNum& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.tag_ == y.tag_;
  }
  friend bool operator!=(const QuadNum& x, const QuadNum& y) { return !(x == y); }

  std::string str() const {
    if (!hasRoot()) return a_.str();
    return "(" + a_.str() + ") + (" + b_.str() + ")*sqrt(" + tag_->name() + ")";
  }

 private:
  static std::optional<DiscTag> mergedTag(const QuadNum& x, const QuadNum& y) {
    if (x.tag_ && y.tag_) {
      if (*x.tag_ != *y.tag_) throw TagMismatch();
      return x.tag_;
    }
    return x.tag_ ? x.tag_ : y.tag_;
  }

  Base a_{};
  Base b_{};
  std::optional<DiscTag> tag_;
};

using QuadRho = QuadNum<RhoNum>;
using QuadCyc = QuadNum<CycNum>;

inline QuadCyc toCyc(const QuadRho& x) {
  if (!x.hasRoot()) return QuadCyc(embed(x.base()));
  return QuadCyc(embed(x.base()), embed(x.rootCoeff()), *x.tag());
}

// Complex conjugation on Q(w, sqrt(D)): tau_{-1} on both parts, sqrt(D)
// fixed (D is totally positive in Q(rho)).
inline QuadCyc conjQuad(const QuadCyc& x) {
  if (!x.hasRoot()) return QuadCyc(x.base().conj());
  return QuadCyc(x.base().conj(), x.rootCoeff().conj(), *x.tag());
}

}  // namespace hepta
