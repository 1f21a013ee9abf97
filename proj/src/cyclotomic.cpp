#include "hepta/cyclotomic.hpp"

#include <sstream>
#include <stdexcept>

namespace hepta {

namespace {

int mod7(long x) {
  long m = x % 7;
  return int(m < 0 ? m + 7 : m);
}

std::string ratPretty(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

void appendTerm(std::ostringstream& os, bool& first, const Rat& q,
                const std::string& sym) {
  if (q == 0) return;
  Rat a = q;
  if (first) {
    if (sgn(a) < 0) {
      os << "-";
      a = -a;
    }
  } else {
    os << (sgn(a) < 0 ? " - " : " + ");
    if (sgn(a) < 0) a = -a;
  }
  first = false;
  if (sym.empty()) {
    os << ratPretty(a);
  } else if (a == 1) {
    os << sym;
  } else {
    os << ratPretty(a) << " " << sym;
  }
}

}  // namespace

CycAut::CycAut(long l) : l_(mod7(l)) {
  if (l_ == 0) throw std::domain_error("cyclotomic automorphism index divisible by 7");
}

CycAut CycAut::inverse() const {
  for (int m = 1; m <= 6; ++m)
    if (mod7(long(l_) * m) == 1) return CycAut(m);
  throw std::logic_error("unit mod 7 without inverse");
}

CycAut CycAut::power(int n) const {
  CycAut base = n >= 0 ? *this : inverse();
  int e = n >= 0 ? n : -n;
  CycAut acc;  // identity
  for (int i = 0; i < e; ++i) acc = acc.compose(base);
  return acc;
}

int CycAut::kClass() const { return kClassOf(l_); }

int kClassOf(int k) {
  int m = mod7(k);
  if (m == 0) throw std::domain_error("k divisible by 7 has no class");
  if (m > 3) m = 7 - m;          // fold k ~ -k
  return m == 3 ? 4 : m;         // {1,2,3} -> {1,2,4}
}

int brillouinRep(int k) {
  int m = mod7(k);
  return m > 3 ? m - 7 : m;
}

CycNum CycNum::omegaPow(long e) {
  int m = mod7(e);
  CycNum r;
  if (m <= 5) {
    r.c_[m] = 1;
  } else {
    for (auto& c : r.c_) c = -1;  // w^6 = -(1 + w + ... + w^5)
  }
  return r;
}

bool CycNum::isZero() const {
  for (const auto& c : c_)
    if (c != 0) return false;
  return true;
}

bool CycNum::isRational() const {
  for (int i = 1; i < 6; ++i)
    if (c_[i] != 0) return false;
  return true;
}

std::optional<Rat> CycNum::tryRational() const {
  if (!isRational()) return std::nullopt;
  return c_[0];
}

CycNum CycNum::conj() const { return applyAut(CycAut(-1), *this); }

CycNum operator+(const CycNum& a, const CycNum& b) {
  CycNum r;
  for (int i = 0; i < 6; ++i) r.c_[i] = a.c_[i] + b.c_[i];
  return r;
}

CycNum operator-(const CycNum& a, const CycNum& b) {
  CycNum r;
  for (int i = 0; i < 6; ++i) r.c_[i] = a.c_[i] - b.c_[i];
  return r;
}

CycNum CycNum::operator-() const {
  CycNum r;
  for (int i = 0; i < 6; ++i) r.c_[i] = -c_[i];
  return r;
}

CycNum operator*(const CycNum& a, const CycNum& b) {
  // Convolution mod x^7 - 1, then w^6 -> -(1 + w + ... + w^5).
  std::array<Rat, 7> d{};
  for (int i = 0; i < 6; ++i) {
    if (a.c_[i] == 0) continue;
    for (int j = 0; j < 6; ++j) {
      if (b.c_[j] == 0) continue;
      d[(i + j) % 7] += a.c_[i] * b.c_[j];
    }
  }
  CycNum r;
  for (int i = 0; i < 6; ++i) r.c_[i] = d[i] - d[6];
  return r;
}

CycNum CycNum::inverse() const {
  if (isZero()) throw std::domain_error("division by zero in Q(w)");
  // x^-1 = (product of the other five conjugates) / N(x).
  CycNum p = 1;
  for (int l = 2; l <= 6; ++l) p = p * applyAut(CycAut(l), *this);
  CycNum n = *this * p;
  auto nq = n.tryRational();
  if (!nq || *nq == 0) throw std::logic_error("norm of nonzero element not a nonzero rational");
  Rat inv = Rat(1) / *nq;
  CycNum r;
  for (int i = 0; i < 6; ++i) r.c_[i] = p.c_[i] * inv;
  return r;
}

CycNum operator/(const CycNum& a, const CycNum& b) { return a * b.inverse(); }

std::string CycNum::str() const {
  std::ostringstream os;
  bool first = true;
  static const char* syms[6] = {"", "w", "w^2", "w^3", "w^4", "w^5"};
  for (int i = 0; i < 6; ++i) appendTerm(os, first, c_[i], syms[i]);
  if (first) os << "0";
  return os.str();
}

RhoNum RhoNum::rhoConjugate(int kClass) {
  switch (kClass) {
    case 1: return RhoNum(0, 1, 0);
    case 2: return RhoNum(-2, 0, 1);   // rho^2 - 2
    case 4: return RhoNum(1, -1, -1);  // 1 - rho - rho^2
    default: throw std::domain_error("rho conjugate index must be 1, 2 or 4");
  }
}

bool RhoNum::isZero() const { return c_[0] == 0 && c_[1] == 0 && c_[2] == 0; }

std::optional<Rat> RhoNum::tryRational() const {
  if (!isRational()) return std::nullopt;
  return c_[0];
}

RhoNum operator+(const RhoNum& a, const RhoNum& b) {
  return RhoNum(a.c_[0] + b.c_[0], a.c_[1] + b.c_[1], a.c_[2] + b.c_[2]);
}

RhoNum operator-(const RhoNum& a, const RhoNum& b) {
  return RhoNum(a.c_[0] - b.c_[0], a.c_[1] - b.c_[1], a.c_[2] - b.c_[2]);
}

RhoNum RhoNum::operator-() const { return RhoNum(-c_[0], -c_[1], -c_[2]); }

RhoNum operator*(const RhoNum& a, const RhoNum& b) {
  // Degree-4 product, reduced by rho^3 = 1 + 2 rho - rho^2 and
  // rho^4 = -1 - rho + 3 rho^2.
  std::array<Rat, 5> d{};
  for (int i = 0; i < 3; ++i) {
    if (a.c_[i] == 0) continue;
    for (int j = 0; j < 3; ++j) d[i + j] += a.c_[i] * b.c_[j];
  }
  return RhoNum(d[0] + d[3] - d[4],
                d[1] + 2 * d[3] - d[4],
                d[2] - d[3] + 3 * d[4]);
}

RhoNum RhoNum::inverse() const {
  if (isZero()) throw std::domain_error("division by zero in Q(rho)");
  RhoNum p = applyAut(CycAut(2), *this) * applyAut(CycAut(4), *this);
  RhoNum n = *this * p;
  auto nq = n.tryRational();
  if (!nq || *nq == 0) throw std::logic_error("norm of nonzero element not a nonzero rational");
  Rat inv = Rat(1) / *nq;
  return RhoNum(p.c_[0] * inv, p.c_[1] * inv, p.c_[2] * inv);
}

RhoNum operator/(const RhoNum& a, const RhoNum& b) { return a * b.inverse(); }

std::string RhoNum::str() const {
  std::ostringstream os;
  bool first = true;
  static const char* syms[3] = {"", "rho", "rho^2"};
  for (int i = 0; i < 3; ++i) appendTerm(os, first, c_[i], syms[i]);
  if (first) os << "0";
  return os.str();
}

CycNum applyAut(CycAut t, const CycNum& x) {
  std::array<Rat, 7> d{};
  for (int i = 0; i < 6; ++i) {
    if (x.coeff(i) == 0) continue;
    d[(i * t.index()) % 7] += x.coeff(i);
  }
  std::array<Rat, 6> c;
  for (int i = 0; i < 6; ++i) c[i] = d[i] - d[6];
  return CycNum(c);
}

RhoNum applyAut(CycAut t, const RhoNum& x) {
  RhoNum m = RhoNum::rhoConjugate(t.kClass());
  return RhoNum(x.coeff(0)) + RhoNum(x.coeff(1)) * m + RhoNum(x.coeff(2)) * m * m;
}

Rat traceToQ(const RhoNum& x) {
  RhoNum s = x + applyAut(CycAut(2), x) + applyAut(CycAut(4), x);
  auto q = s.tryRational();
  if (!q) throw std::logic_error("trace did not land in Q");
  return *q;
}

Rat normToQ(const RhoNum& x) {
  RhoNum p = x * applyAut(CycAut(2), x) * applyAut(CycAut(4), x);
  auto q = p.tryRational();
  if (!q) throw std::logic_error("norm did not land in Q");
  return *q;
}

Rat normToQ(const CycNum& x) {
  CycNum p = x;
  for (int l = 2; l <= 6; ++l) p = p * applyAut(CycAut(l), x);
  auto q = p.tryRational();
  if (!q) throw std::logic_error("norm did not land in Q");
  return *q;
}

CycNum embed(const RhoNum& x) {
  CycNum rho = CycNum::omegaPow(1) + CycNum::omegaPow(6);
  return CycNum(x.coeff(0)) + CycNum(x.coeff(1)) * rho + CycNum(x.coeff(2)) * rho * rho;
}

std::optional<RhoNum> project(const CycNum& x) {
  // Conjugation-fixed power-basis elements satisfy c1 = 0, c2 = c5, c3 = c4,
  // and then x = (c0 - 2c2 + c3) + (-c3) rho + (c2 - c3) rho^2.
  if (x.coeff(1) != 0 || x.coeff(2) != x.coeff(5) || x.coeff(3) != x.coeff(4))
    return std::nullopt;
  return RhoNum(x.coeff(0) - 2 * x.coeff(2) + x.coeff(3), -x.coeff(3),
                x.coeff(2) - x.coeff(3));
}

bool isIntegral(const RhoNum& x) {
  return isInteger(x.coeff(0)) && isInteger(x.coeff(1)) && isInteger(x.coeff(2));
}

}  // namespace hepta
