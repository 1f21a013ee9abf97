#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hepta {

struct Check {
  std::string name;
  std::string anchor;  // the identity being checked, in plain math notation
  bool pass = false;
  std::string expected;
  std::string actual;
};

struct VerifyReport {
  std::vector<Check> checks;

  bool allPass() const;
  int failures() const;
  void print(std::ostream& os, bool verbose = false) const;
};

// Thematic check groups, selectable from the CLI as --section 2..7:
//   2: configuration spaces, Hamiltonian and spin-lowering structure
//   3: cyclotomic arithmetic, orbits, subfield lattice, block consistency
//   4: momentum-block fixtures, spectra, projectors, densities, the oracle
//   5: trace/norm facts and the discriminant lemmas
//   6: Kummer independence, wreath groups, field degrees
//   7: Galois actions on wavelets, operators, energies, densities
VerifyReport verifySection(int section);
VerifyReport verifyAll();

}  // namespace hepta
