#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hepta/quadratic.hpp"

// Valuations at the designated primes of Z[rho], square / nonsquare
// certification in Q(rho), and the Kummer independence certificates for the
// six discriminants.

namespace hepta {

// The prime of Z[rho] attached to a discriminant tag:
//   pi_2^k = Delta_2^k itself (norm 1289, prime), and
//   pi_3^k = the norm-13 conjugate of 3+rho dividing Delta_3^k exactly once
//            (k=1 -> tau(3+rho), k=2 -> tau^2(3+rho), k=4 -> 3+rho).
RhoNum designatedPrime(DiscTag tag);
std::string designatedPrimeName(DiscTag tag);

// Largest v with x / pi^v in Z[rho]. Requires x nonzero and integral and a
// generator pi of prime rational norm.
long valuationAt(const RhoNum& x, const RhoNum& pi);

// Continued-fraction reconstruction of a nearby rational with denominator
// at most maxDen; nullopt when the expansion fails to settle.
std::optional<Rat> reconstructRational(double x, long maxDen);

struct NonsquareCertificate {
  enum class Kind { NormNotSquare, OddValuation };
  Kind kind;
  Rat norm;             // rational norm of the input
  RhoNum witnessPrime;  // engaged for OddValuation
  std::string witnessName;
  long valuation = 0;
};

struct SqrtInRhoResult {
  enum class Status { Square, Nonsquare, Undecided };
  Status status = Status::Undecided;
  RhoNum root;  // engaged for Square (determined up to sign)
  std::optional<NonsquareCertificate> certificate;
};

// Decides squareness of x in Q(rho). Squares are found by numeric square
// roots in the three real embeddings (8 sign choices), continued-fraction
// reconstruction with denominator bound 10^6, and exact verification by
// squaring; nonsquares are certified by a non-square rational norm or an
// odd valuation at one of the six designated primes. Reconstruction failure
// alone never asserts anything.
SqrtInRhoResult sqrtInRho(const RhoNum& x);

struct KummerCertificate {
  std::vector<DiscTag> subset;  // nonempty, canonical order
  DiscTag witnessTag;           // lowest-indexed member; supplies the prime
  RhoNum witnessPrime;
  long valuation = 0;  // odd by construction, else the certificate failed
};

// One certificate per nonempty subset of the six discriminants (63 in
// total), each exhibiting an odd valuation of the subset product at a
// designated prime. Throws if any subset cannot be certified.
std::vector<KummerCertificate> kummerIndependence();

}  // namespace hepta
