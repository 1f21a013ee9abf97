#pragma once

#include <array>
#include <optional>
#include <string>

#include "hepta/rational.hpp"

// The field tower Q < Q(rho) < Q(w), where w = exp(2*pi*i/7) and
// rho = w + w^-1 = 2cos(2*pi/7).
//
//   Q(w)   : power basis {1, w, ..., w^5}, w^6 reduced via 1+w+...+w^6 = 0
//   Q(rho) : basis {1, rho, rho^2}, minimal polynomial x^3 + x^2 - 2x - 1
//
// Elements are immutable values; all arithmetic is exact.

namespace hepta {

class CycNum;
class RhoNum;

// Galois automorphism tau_l of Q(w): tau_l(w^k) = w^{lk}. The index l is a
// unit mod 7; tau_1 is the identity, tau_6 = tau_{-1} is complex
// conjugation, and the full group is cyclic of order 6.
class CycAut {
 public:
  CycAut() : l_(1) {}
  explicit CycAut(long l);

  int index() const { return l_; }  // in 1..6
  bool isIdentity() const { return l_ == 1; }
  CycAut compose(CycAut other) const { return CycAut(long(l_) * other.l_); }
  CycAut inverse() const;
  CycAut power(int n) const;

  // Folds l into the square class {1, 2, 4}: {1,6}->1, {2,5}->2, {3,4}->4.
  int kClass() const;

  friend bool operator==(CycAut a, CycAut b) { return a.l_ == b.l_; }
  friend bool operator!=(CycAut a, CycAut b) { return !(a == b); }

 private:
  int l_;
};

// Folds a nonzero quasimomentum (or any integer not divisible by 7) into
// its class in {1, 2, 4} under k ~ -k.
int kClassOf(int k);

// Reduces an integer mod 7 into the Brillouin zone B = {-3..3}.
int brillouinRep(int k);

class CycNum {
 public:
  CycNum() = default;
  CycNum(long n) { c_[0] = n; }  // NOLINT: implicit by design
  CycNum(const Rat& q) { c_[0] = q; }
  explicit CycNum(std::array<Rat, 6> coeffs) : c_(std::move(coeffs)) {}

  static CycNum omega() { return omegaPow(1); }
  static CycNum omegaPow(long e);  // w^e for any integer e

  const Rat& coeff(int i) const { return c_.at(i); }
  const std::array<Rat, 6>& coeffs() const { return c_; }

  bool isZero() const;
  bool isRational() const;
  std::optional<Rat> tryRational() const;

  CycNum conj() const;  // complex conjugation tau_{-1}
  CycNum inverse() const;

  friend CycNum operator+(const CycNum& a, const CycNum& b);
  friend CycNum operator-(const CycNum& a, const CycNum& b);
  friend CycNum operator*(const CycNum& a, const CycNum& b);
  friend CycNum operator/(const CycNum& a, const CycNum& b);
  CycNum operator-() const;
  CycNum& operator+=(const CycNum& b) { return *this = *this + b; }
  CycNum& operator-=(const CycNum& b) { return *this = *this - b; }
  CycNum& operator*=(const CycNum& b) { return *this = *this * b; }
  CycNum& operator/=(const CycNum& b) { return *this = *this / b; }

  friend bool operator==(const CycNum& a, const CycNum& b) { return a.c_ == b.c_; }
  friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

  std::string str() const;  // "c0 + c1 w + ..." with rationals as p/q

 private:
  std::array<Rat, 6> c_{};  // c0 + c1 w + ... + c5 w^5
};

class RhoNum {
 public:
  RhoNum() = default;
  RhoNum(long n) { c_[0] = n; }  // NOLINT: implicit by design
  RhoNum(const Rat& q) { c_[0] = q; }
  RhoNum(Rat a0, Rat a1, Rat a2) : c_{std::move(a0), std::move(a1), std::move(a2)} {}

  static RhoNum rho() { return RhoNum(0, 1, 0); }
  // rho_1 = rho, rho_2 = w^2 + w^-2, rho_4 = w^4 + w^-4 (kClass in {1,2,4}).
  static RhoNum rhoConjugate(int kClass);

  const Rat& coeff(int i) const { return c_.at(i); }
  const std::array<Rat, 3>& coeffs() const { return c_; }

  bool isZero() const;
  bool isRational() const { return c_[1] == 0 && c_[2] == 0; }
  std::optional<Rat> tryRational() const;

  RhoNum inverse() const;

  friend RhoNum operator+(const RhoNum& a, const RhoNum& b);
  friend RhoNum operator-(const RhoNum& a, const RhoNum& b);
  friend RhoNum operator*(const RhoNum& a, const RhoNum& b);
  friend RhoNum operator/(const RhoNum& a, const RhoNum& b);
  RhoNum operator-() const;
  RhoNum& operator+=(const RhoNum& b) { return *this = *this + b; }
  RhoNum& operator-=(const RhoNum& b) { return *this = *this - b; }
  RhoNum& operator*=(const RhoNum& b) { return *this = *this * b; }
  RhoNum& operator/=(const RhoNum& b) { return *this = *this / b; }

  friend bool operator==(const RhoNum& a, const RhoNum& b) { return a.c_ == b.c_; }
  friend bool operator!=(const RhoNum& a, const RhoNum& b) { return !(a == b); }

  std::string str() const;  // "a0 + a1 rho + a2 rho^2"

 private:
  std::array<Rat, 3> c_{};  // a0 + a1 rho + a2 rho^2
};

CycNum applyAut(CycAut t, const CycNum& x);
// On the real subfield tau_l acts through its class: rho -> rho_{class(l)};
// tau_{-1} is the identity here.
RhoNum applyAut(CycAut t, const RhoNum& x);

// Trace and norm of the degree-3 extension Q(rho)/Q: sum and product of the
// three conjugates x_1, x_2, x_4.
Rat traceToQ(const RhoNum& x);
Rat normToQ(const RhoNum& x);
// Norm of Q(w)/Q: product of all six conjugates.
Rat normToQ(const CycNum& x);

// rho = w + w^6 as a reduced power-basis element.
CycNum embed(const RhoNum& x);
// Inverse of embed on the conjugation-fixed subfield; nullopt otherwise.
std::optional<RhoNum> project(const CycNum& x);

// All coefficients integral, i.e. membership in Z[rho] (the ring of
// integers of the maximal real subfield).
bool isIntegral(const RhoNum& x);

}  // namespace hepta
