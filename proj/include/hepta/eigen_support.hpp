#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <vector>

#include "hepta/quadratic.hpp"

// Eigen scalar traits for the exact field types, dense typedefs, and the
// exact linear-algebra free functions the rest of the code builds on.
// Pivoting is by first nonzero entry (there is no magnitude to compare);
// every routine is exact and throws rather than approximating.

namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0, IsSigned = 1, IsComplex = 0, RequireInitialization = 1,
    ReadCost = 6, AddCost = 100, MulCost = 100
  };
};

template <>
struct NumTraits<hepta::CycNum> : GenericNumTraits<hepta::CycNum> {
  typedef hepta::CycNum Real;
  typedef hepta::CycNum NonInteger;
  typedef hepta::CycNum Nested;
  static inline Real epsilon() { return hepta::CycNum(0); }
  static inline Real dummy_precision() { return hepta::CycNum(0); }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0, IsSigned = 1, IsComplex = 0, RequireInitialization = 1,
    ReadCost = 40, AddCost = 600, MulCost = 4000
  };
};

template <>
struct NumTraits<hepta::RhoNum> : GenericNumTraits<hepta::RhoNum> {
  typedef hepta::RhoNum Real;
  typedef hepta::RhoNum NonInteger;
  typedef hepta::RhoNum Nested;
  static inline Real epsilon() { return hepta::RhoNum(0); }
  static inline Real dummy_precision() { return hepta::RhoNum(0); }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0, IsSigned = 1, IsComplex = 0, RequireInitialization = 1,
    ReadCost = 20, AddCost = 300, MulCost = 1000
  };
};

template <class B>
struct NumTraits<hepta::QuadNum<B>> : GenericNumTraits<hepta::QuadNum<B>> {
  typedef hepta::QuadNum<B> Real;
  typedef hepta::QuadNum<B> NonInteger;
  typedef hepta::QuadNum<B> Nested;
  static inline Real epsilon() { return hepta::QuadNum<B>(0); }
  static inline Real dummy_precision() { return hepta::QuadNum<B>(0); }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0, IsSigned = 1, IsComplex = 0, RequireInitialization = 1,
    ReadCost = 80, AddCost = 1200, MulCost = 8000
  };
};

}  // namespace Eigen

namespace hepta {

template <class F>
using Mat = Eigen::Matrix<F, Eigen::Dynamic, Eigen::Dynamic>;
template <class F>
using Vec = Eigen::Matrix<F, Eigen::Dynamic, 1>;

using MatQ = Mat<Rat>;
using MatR = Mat<RhoNum>;
using MatC = Mat<CycNum>;
using MatQuadC = Mat<QuadCyc>;
using VecC = Vec<CycNum>;

// Scalar conjugation used by dagger(): identity on the real fields,
// tau_{-1} on Q(w) and its quadratic extensions.
inline Rat conjScalar(const Rat& x) { return x; }
inline RhoNum conjScalar(const RhoNum& x) { return x; }
inline CycNum conjScalar(const CycNum& x) { return x.conj(); }
inline QuadRho conjScalar(const QuadRho& x) { return x; }
inline QuadCyc conjScalar(const QuadCyc& x) { return conjQuad(x); }

template <class F>
Mat<F> dagger(const Mat<F>& a) {
  Mat<F> r(a.cols(), a.rows());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) r(j, i) = conjScalar(a(i, j));
  return r;
}

template <class F>
bool isZeroMat(const Mat<F>& a) {
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (!(a(i, j) == F(0))) return false;
  return true;
}

template <class F>
bool sameMat(const Mat<F>& a, const Mat<F>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (!(a(i, j) == b(i, j))) return false;
  return true;
}

namespace detail {

// Reduced row echelon form in place; returns the pivot column of each
// pivot row.
template <class F>
std::vector<Eigen::Index> rref(Mat<F>& a) {
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < a.cols() && row < a.rows(); ++col) {
    Eigen::Index p = -1;
    for (Eigen::Index i = row; i < a.rows(); ++i)
      if (!(a(i, col) == F(0))) { p = i; break; }
    if (p < 0) continue;
    if (p != row) a.row(p).swap(a.row(row));
    F inv = F(1) / a(row, col);
    for (Eigen::Index j = col; j < a.cols(); ++j) a(row, j) = a(row, j) * inv;
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col) == F(0)) continue;
      F f = a(i, col);
      for (Eigen::Index j = col; j < a.cols(); ++j)
        a(i, j) = a(i, j) - f * a(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace detail

template <class F>
long rankOf(Mat<F> a) {
  return long(detail::rref(a).size());
}

// Basis of the right kernel, one column per free variable.
template <class F>
Mat<F> kernelOf(const Mat<F>& a) {
  Mat<F> r = a;
  auto pivots = detail::rref(r);
  std::vector<bool> isPivot(size_t(a.cols()), false);
  for (auto c : pivots) isPivot[size_t(c)] = true;
  Eigen::Index nfree = a.cols() - Eigen::Index(pivots.size());
  Mat<F> kernel = Mat<F>::Zero(a.cols(), nfree);
  Eigen::Index fi = 0;
  for (Eigen::Index col = 0; col < a.cols(); ++col) {
    if (isPivot[size_t(col)]) continue;
    kernel(col, fi) = F(1);
    for (size_t pr = 0; pr < pivots.size(); ++pr)
      kernel(pivots[pr], fi) = -r(Eigen::Index(pr), col);
    ++fi;
  }
  return kernel;
}

// Solves A X = B exactly (any shape); throws if the system is inconsistent.
// Free variables are set to zero.
template <class F>
Mat<F> solveExact(const Mat<F>& a, const Mat<F>& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solveExact: shape mismatch");
  Mat<F> aug(a.rows(), a.cols() + b.cols());
  aug.leftCols(a.cols()) = a;
  aug.rightCols(b.cols()) = b;
  auto pivots = detail::rref(aug);
  for (auto c : pivots)
    if (c >= a.cols()) throw std::domain_error("solveExact: inconsistent system");
  Mat<F> x = Mat<F>::Zero(a.cols(), b.cols());
  for (size_t pr = 0; pr < pivots.size(); ++pr)
    for (Eigen::Index j = 0; j < b.cols(); ++j)
      x(pivots[pr], j) = aug(Eigen::Index(pr), a.cols() + j);
  return x;
}

template <class F>
Mat<F> inverseOf(const Mat<F>& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("inverseOf: not square");
  if (rankOf<F>(a) != a.rows()) throw std::domain_error("inverseOf: singular matrix");
  return solveExact<F>(a, Mat<F>::Identity(a.rows(), a.cols()));
}

template <class F, class G>
Mat<G> castMat(const Mat<F>& a) {
  Mat<G> r(a.rows(), a.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) r(i, j) = G(a(i, j));
  return r;
}

inline MatQuadC toQuadC(const MatC& m) { return castMat<CycNum, QuadCyc>(m); }

template <class F>
F traceOf(const Mat<F>& a) {
  F t(0);
  for (Eigen::Index i = 0; i < a.rows() && i < a.cols(); ++i) t += a(i, i);
  return t;
}

template <class F>
std::string matToString(const Mat<F>& a) {
  std::string s = "[";
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    s += i == 0 ? "[" : " [";
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      s += a(i, j).str();
      if (j + 1 < a.cols()) s += ", ";
    }
    s += i + 1 < a.rows() ? "]\n" : "]";
  }
  return s + "]";
}

}  // namespace hepta
