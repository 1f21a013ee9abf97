#include "hepta/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "hepta/configs.hpp"

namespace hepta {

DenseSym::DenseSym(Eigen::MatrixXd m, double symTol) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) throw std::invalid_argument("DenseSym: not square");
  double scale = std::max(1.0, m_.cwiseAbs().maxCoeff());
  if ((m_ - m_.transpose()).cwiseAbs().maxCoeff() > symTol * scale)
    throw std::invalid_argument("DenseSym: matrix is not symmetric");
  m_ = 0.5 * (m_ + m_.transpose().eval());
}

DenseSym DenseSym::embedHermitian(const Eigen::MatrixXcd& h, double hermTol) {
  const auto n = h.rows();
  if (n != h.cols()) throw std::invalid_argument("embedHermitian: not square");
  double scale = std::max(1.0, h.cwiseAbs().maxCoeff());
  if ((h - h.adjoint()).cwiseAbs().maxCoeff() > hermTol * scale)
    throw std::invalid_argument("embedHermitian: matrix is not Hermitian");
  Eigen::MatrixXd e(2 * n, 2 * n);
  e.topLeftCorner(n, n) = h.real();
  e.topRightCorner(n, n) = -h.imag();
  e.bottomLeftCorner(n, n) = h.imag();
  e.bottomRightCorner(n, n) = h.real();
  return DenseSym(e, hermTol);
}

std::vector<double> jacobiEigenvalues(const DenseSym& m, double tol) {
  Eigen::MatrixXd a = m.matrix();
  const int n = m.size();
  if (n == 1) return {a(0, 0)};
  auto offNorm = [&]() {
    double s = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) s += 2 * a(i, j) * a(i, j);
    return std::sqrt(s);
  };
  const double target = tol * std::max(a.norm(), 1e-300);
  constexpr int kSweepCap = 100;
  int sweep = 0;
  while (offNorm() > target) {
    if (++sweep > kSweepCap)
      throw std::runtime_error("jacobiEigenvalues: no convergence after sweep cap");
    const double threshold = offNorm() / (n * double(n));
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        if (std::abs(a(p, q)) <= threshold) continue;
        const double apq = a(p, q);
        const double theta = (a(q, q) - a(p, p)) / (2 * apq);
        double t = (theta >= 0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int i = 0; i < n; ++i) {
          const double aip = a(i, p), aiq = a(i, q);
          a(i, p) = c * aip - s * aiq;
          a(i, q) = s * aip + c * aiq;
        }
        for (int i = 0; i < n; ++i) {
          const double api = a(p, i), aqi = a(q, i);
          a(p, i) = c * api - s * aqi;
          a(q, i) = s * api + c * aqi;
        }
      }
    }
  }
  std::vector<double> ev(static_cast<size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) ev[size_t(i)] = a(i, i);
  std::sort(ev.begin(), ev.end());
  return ev;
}

SpectrumComparison compareSpectra(const std::vector<double>& exact,
                                  const std::vector<double>& numeric,
                                  double tol) {
  SpectrumComparison cmp;
  cmp.sizesMatch = exact.size() == numeric.size();
  if (!cmp.sizesMatch) {
    cmp.detail = "size mismatch: " + std::to_string(exact.size()) + " vs " +
                 std::to_string(numeric.size());
    return cmp;
  }
  std::vector<double> a = exact, b = numeric;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  for (size_t i = 0; i < a.size(); ++i)
    cmp.maxDeviation = std::max(cmp.maxDeviation, std::abs(a[i] - b[i]));
  // Degeneracy clusters: a gap above 10*tol starts a new cluster.
  auto clusters = [&](const std::vector<double>& v) {
    std::vector<size_t> sizes;
    size_t run = 1;
    for (size_t i = 1; i < v.size(); ++i) {
      if (v[i] - v[i - 1] > 10 * tol) {
        sizes.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    if (!v.empty()) sizes.push_back(run);
    return sizes;
  };
  cmp.clustersMatch = clusters(a) == clusters(b);
  std::ostringstream os;
  os << "max deviation " << cmp.maxDeviation
     << (cmp.clustersMatch ? ", clusters match" : ", cluster mismatch");
  cmp.detail = os.str();
  return cmp;
}

namespace {

int ringNext(int node) { return node == kRingSize ? 1 : node + 1; }
int ringPrev(int node) { return node == 1 ? kRingSize : node - 1; }

// Integer Hamiltonian of one level, assembled directly from hop counting.
Eigen::MatrixXd levelHamiltonian(int r) {
  auto level = buildConfigs(r);
  const int n = int(level.size());
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n);
  for (int ci = 0; ci < n; ++ci) {
    const Config c = level[size_t(ci)];
    for (int node = 1; node <= kRingSize; ++node) {
      if (!c.occupied(node)) continue;
      for (int dst : {ringNext(node), ringPrev(node)}) {
        if (c.occupied(dst)) continue;
        Config moved{c.mask ^ (1u << (node - 1)) ^ (1u << (dst - 1))};
        h(configIndex(level, moved), ci) += 1.0;
        h(ci, ci) -= 1.0;
      }
    }
  }
  return h;
}

}  // namespace

Eigen::MatrixXd fullArithmeticHamiltonian() {
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(128, 128);
  int offset = 0;
  for (int r = 0; r <= kRingSize; ++r) {
    Eigen::MatrixXd hr = levelHamiltonian(r);
    h.block(offset, offset, hr.rows(), hr.cols()) = hr;
    offset += int(hr.rows());
  }
  return h;
}

long arithmeticTraceByCounting() {
  long trace = 0;
  for (unsigned mask = 0; mask < 128; ++mask) {
    Config c{mask};
    for (int node = 1; node <= kRingSize; ++node) {
      if (!c.occupied(node)) continue;
      if (!c.occupied(ringNext(node))) --trace;
      if (!c.occupied(ringPrev(node))) --trace;
    }
  }
  return trace;
}

std::vector<double> blockOracleEigenvalues(int r, int k, double tol) {
  auto level = buildConfigs(r);
  auto orbits = buildOrbits(r);
  Eigen::MatrixXd h = levelHamiltonian(r);
  // Unit-normalized Fourier columns w^{-kj}/sqrt(7) per regular orbit
  // (size-1 orbits carry only k = 0).
  std::vector<Eigen::VectorXcd> basis;
  for (const Orbit& o : orbits) {
    if (o.size == 1) {
      if (k != 0) continue;
      Eigen::VectorXcd v = Eigen::VectorXcd::Zero(int(level.size()));
      v(configIndex(level, o.memberAt(1))) = 1.0;
      basis.push_back(v);
      continue;
    }
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(int(level.size()));
    for (int j = 1; j <= kRingSize; ++j) {
      const double arg = -2.0 * std::numbers::pi * k * j / 7.0;
      v(configIndex(level, o.memberAt(j))) =
          std::complex<double>(std::cos(arg), std::sin(arg)) / std::sqrt(7.0);
    }
    basis.push_back(v);
  }
  if (basis.empty()) return {};
  Eigen::MatrixXcd w(int(level.size()), int(basis.size()));
  for (int j = 0; j < int(basis.size()); ++j) w.col(j) = basis[size_t(j)];
  Eigen::MatrixXcd block = w.adjoint() * h * w;
  auto doubled = jacobiEigenvalues(DenseSym::embedHermitian(block, 1e-9), tol);
  std::vector<double> ev;
  for (size_t i = 0; i + 1 < doubled.size(); i += 2)
    ev.push_back(0.5 * (doubled[i] + doubled[i + 1]));
  return ev;
}

std::vector<double> shuffledOracleEigenvalues(unsigned seed, double tol) {
  Eigen::MatrixXd h = fullArithmeticHamiltonian();
  std::vector<int> perm(128);
  std::iota(perm.begin(), perm.end(), 0);
  std::mt19937 rng(seed);
  std::shuffle(perm.begin(), perm.end(), rng);
  Eigen::MatrixXd p(128, 128);
  for (int i = 0; i < 128; ++i)
    for (int j = 0; j < 128; ++j) p(i, j) = h(perm[size_t(i)], perm[size_t(j)]);
  return jacobiEigenvalues(DenseSym(std::move(p)), tol);
}

}  // namespace hepta
