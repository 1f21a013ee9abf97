#include "hepta/number_theory.hpp"

#include <cmath>
#include <stdexcept>

#include "hepta/numeric.hpp"

namespace hepta {

RhoNum designatedPrime(DiscTag tag) {
  if (tag.rPrime == 2) return discriminantRho(tag);
  RhoNum threePlusRho = RhoNum(3) + RhoNum::rho();
  switch (tag.kClass) {
    case 1: return applyAut(CycAut(2), threePlusRho);
    case 2: return applyAut(CycAut(4), threePlusRho);
    case 4: return threePlusRho;
    default: throw std::domain_error("bad tag");
  }
}

std::string designatedPrimeName(DiscTag tag) {
  if (tag.rPrime == 2) return tag.name();
  switch (tag.kClass) {
    case 1: return "tau(3+rho)";
    case 2: return "tau^2(3+rho)";
    default: return "3+rho";
  }
}

long valuationAt(const RhoNum& x, const RhoNum& pi) {
  if (x.isZero()) throw std::domain_error("valuation of zero");
  if (!isIntegral(x)) throw std::domain_error("valuation requires an element of Z[rho]");
  RhoNum cur = x;
  RhoNum piInv = pi.inverse();
  long v = 0;
  while (true) {
    RhoNum next = cur * piInv;
    if (!isIntegral(next)) return v;
    cur = next;
    ++v;
    if (v > 4096) throw std::logic_error("valuation did not terminate; pi is a unit?");
  }
}

std::optional<Rat> reconstructRational(double x, long maxDen) {
  if (!std::isfinite(x)) return std::nullopt;
  // Continued-fraction convergents p_n/q_n with
  // p_n = a_n p_{n-1} + p_{n-2}, q_n = a_n q_{n-1} + q_{n-2}.
  BigInt pPrev = 1, pPrev2 = 0, qPrev = 0, qPrev2 = 1;
  bool have = false;
  double rem = x;
  for (int i = 0; i < 64; ++i) {
    if (std::abs(rem) > 1e18) return std::nullopt;
    double fl = std::floor(rem);
    BigInt a(fl);
    BigInt p = a * pPrev + pPrev2;
    BigInt q = a * qPrev + qPrev2;
    if (have && q > maxDen) break;
    pPrev2 = pPrev; pPrev = p;
    qPrev2 = qPrev; qPrev = q;
    have = true;
    double frac = rem - fl;
    if (frac < 1e-12) break;
    rem = 1.0 / frac;
  }
  if (!have || qPrev == 0) return std::nullopt;
  Rat r(pPrev, qPrev);
  r.canonicalize();
  return r;
}

namespace {

// Scale away denominators: x * d^2 is integral and lies in the same square
// class; a root of the scaled element divides back by d.
RhoNum scaledIntegral(const RhoNum& x, BigInt& dOut) {
  BigInt d = 1;
  for (int i = 0; i < 3; ++i) {
    BigInt den = x.coeff(i).get_den();
    BigInt g;
    mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), den.get_mpz_t());
    d = d / g * den;
  }
  dOut = d;
  Rat d2(d * d);
  return RhoNum(x.coeff(0) * d2, x.coeff(1) * d2, x.coeff(2) * d2);
}

std::optional<RhoNum> reconstructRoot(const RhoNum& x, long maxDen) {
  // Embedding values of rho and of x in the three real places.
  double rhoVal[3], xVal[3];
  const int cls[3] = {1, 2, 4};
  for (int i = 0; i < 3; ++i) {
    rhoVal[i] = numericEmbedReal(RhoNum::rho(), CycAut(cls[i]));
    xVal[i] = numericEmbedReal(x, CycAut(cls[i]));
    if (xVal[i] < 0) return std::nullopt;  // not totally positive
  }
  for (int signs = 0; signs < 8; ++signs) {
    double y[3];
    for (int i = 0; i < 3; ++i)
      y[i] = ((signs >> i) & 1 ? -1.0 : 1.0) * std::sqrt(xVal[i]);
    // Solve the Vandermonde system (1, rho_i, rho_i^2) c = y by Cramer.
    double m[3][3];
    for (int i = 0; i < 3; ++i) {
      m[i][0] = 1.0;
      m[i][1] = rhoVal[i];
      m[i][2] = rhoVal[i] * rhoVal[i];
    }
    auto det3 = [](double a[3][3]) {
      return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
             a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
             a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
    };
    double det = det3(m);
    if (std::abs(det) < 1e-12) return std::nullopt;
    Rat c[3];
    bool ok = true;
    for (int j = 0; j < 3 && ok; ++j) {
      double mj[3][3];
      for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k) mj[i][k] = k == j ? y[i] : m[i][k];
      auto rec = reconstructRational(det3(mj) / det, maxDen);
      if (!rec) ok = false;
      else c[j] = *rec;
    }
    if (!ok) continue;
    RhoNum cand(c[0], c[1], c[2]);
    if (cand * cand == x) return cand;  // exact verification, always
  }
  return std::nullopt;
}

}  // namespace

SqrtInRhoResult sqrtInRho(const RhoNum& x) {
  if (x.isZero()) throw std::domain_error("sqrtInRho of zero");
  SqrtInRhoResult res;
  Rat n = normToQ(x);
  if (!isPerfectSquare(n)) {
    res.status = SqrtInRhoResult::Status::Nonsquare;
    res.certificate = NonsquareCertificate{
        NonsquareCertificate::Kind::NormNotSquare, n, RhoNum(), "", 0};
    return res;
  }
  BigInt d;
  RhoNum xi = scaledIntegral(x, d);
  for (DiscTag tag : allDiscTags()) {
    RhoNum pi = designatedPrime(tag);
    long v = valuationAt(xi, pi);
    // d is rational, so scaling changed the valuation by an even amount.
    if (v % 2 != 0) {
      res.status = SqrtInRhoResult::Status::Nonsquare;
      res.certificate = NonsquareCertificate{
          NonsquareCertificate::Kind::OddValuation, n, pi,
          designatedPrimeName(tag), v};
      return res;
    }
  }
  if (auto root = reconstructRoot(xi, 1000000)) {
    res.status = SqrtInRhoResult::Status::Square;
    res.root = *root / RhoNum(Rat(d));
    return res;
  }
  res.status = SqrtInRhoResult::Status::Undecided;
  return res;
}

std::vector<KummerCertificate> kummerIndependence() {
  const auto& tags = allDiscTags();
  std::vector<KummerCertificate> certs;
  certs.reserve(63);
  for (unsigned mask = 1; mask < 64; ++mask) {
    KummerCertificate cert{{}, tags[0], RhoNum(), 0};
    RhoNum prod = 1;
    int lowest = -1;
    for (int i = 0; i < 6; ++i) {
      if (!(mask >> i & 1)) continue;
      if (lowest < 0) lowest = i;
      cert.subset.push_back(tags[size_t(i)]);
      prod = prod * discriminantRho(tags[size_t(i)]);
    }
    cert.witnessTag = tags[size_t(lowest)];
    cert.witnessPrime = designatedPrime(cert.witnessTag);
    cert.valuation = valuationAt(prod, cert.witnessPrime);
    if (cert.valuation % 2 == 0)
      throw std::logic_error("even valuation for subset product; independence fails");
    certs.push_back(std::move(cert));
  }
  return certs;
}

}  // namespace hepta
