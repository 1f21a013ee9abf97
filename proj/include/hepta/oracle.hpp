#pragma once

#include <Eigen/Dense>

#include <string>
#include <vector>

// Floating-point cross-check of the exact spectrum. The oracle consumes
// only the integer Hamiltonian and raw complex exponentials; it never
// touches the exact field types, so the two paths stay independent.

namespace hepta {

class DenseSym {
 public:
  explicit DenseSym(Eigen::MatrixXd m, double symTol = 1e-12);

  // Real 2n x 2n embedding [[Re, -Im], [Im, Re]] of a Hermitian matrix;
  // every eigenvalue of the input appears twice.
  static DenseSym embedHermitian(const Eigen::MatrixXcd& h, double hermTol = 1e-12);

  int size() const { return int(m_.rows()); }
  const Eigen::MatrixXd& matrix() const { return m_; }

 private:
  Eigen::MatrixXd m_;
};

// Cyclic Jacobi with threshold sweeps; terminates when the off-diagonal
// Frobenius norm drops below tol times the input norm, throws after the
// sweep cap (100). Returns eigenvalues ascending.
std::vector<double> jacobiEigenvalues(const DenseSym& m, double tol = 1e-12);

struct SpectrumComparison {
  double maxDeviation = 0.0;
  bool sizesMatch = false;
  bool clustersMatch = false;
  std::string detail;

  bool pass(double tol) const {
    return sizesMatch && clustersMatch && maxDeviation <= tol;
  }
};

// Greedy matching of two ascending eigenvalue lists; degeneracy clusters
// (gaps larger than 10*tol) must agree in size.
SpectrumComparison compareSpectra(const std::vector<double>& exact,
                                  const std::vector<double>& numeric,
                                  double tol);

// The full 128 x 128 Hamiltonian (block diagonal over r) in doubles.
Eigen::MatrixXd fullArithmeticHamiltonian();

// Trace of the full Hamiltonian counted combinatorially (no matrix).
long arithmeticTraceByCounting();

// Eigenvalues of the (r, k) block: the integer Hamiltonian conjugated to a
// unit-normalized Fourier basis numerically, real-embedded and
// diagonalized, with the doubled multiplicities halved.
std::vector<double> blockOracleEigenvalues(int r, int k, double tol = 1e-12);

// Eigenvalues of the full Hamiltonian with rows/columns reordered by a
// deterministic shuffle (seed selects the permutation).
std::vector<double> shuffledOracleEigenvalues(unsigned seed, double tol = 1e-12);

}  // namespace hepta
