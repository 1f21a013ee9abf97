#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace hepta {

// Exact rational scalar. mpq_class keeps gcd(|num|, den) = 1 and den > 0
// after canonicalize(), and every arithmetic operator preserves that form.
using Rat = mpq_class;
using BigInt = mpz_class;

inline Rat ratOf(long num, long den = 1) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

// Parses "p/q" or "p" (base 10).
inline Rat ratFromString(const std::string& s) {
  Rat q(s, 10);
  if (q.get_den() == 0) throw std::invalid_argument("bad rational: " + s);
  q.canonicalize();
  return q;
}

// Always renders with an explicit denominator, e.g. "-3/1", "5/7".
inline std::string ratToString(const Rat& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline double ratToDouble(const Rat& q) { return q.get_d(); }

inline bool isInteger(const Rat& q) { return q.get_den() == 1; }

inline long ratToLong(const Rat& q) {
  if (!isInteger(q) || !q.get_num().fits_slong_p())
    throw std::domain_error("rational does not fit a long");
  return q.get_num().get_si();
}

inline bool isPerfectSquare(const Rat& q, Rat* root = nullptr) {
  if (sgn(q) < 0) return false;
  const BigInt& num = q.get_num();
  const BigInt& den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) ||
      !mpz_perfect_square_p(den.get_mpz_t()))
    return false;
  if (root) {
    BigInt rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    *root = Rat(rn, rd);
  }
  return true;
}

// Deterministic primality for word-sized inputs (trial division is plenty
// for the handful of norms that show up here).
inline bool isPrimeWord(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace hepta
