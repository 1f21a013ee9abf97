// Command-line surface: exact spectrum generation, the verification suite,
// Galois-action exploration, and JSON export.

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "hepta/galois.hpp"
#include "hepta/json_io.hpp"
#include "hepta/numeric.hpp"
#include "hepta/verify.hpp"

namespace {

using namespace hepta;

std::string renderNu(const std::optional<int>& nu) {
  if (!nu) return "-";
  return *nu > 0 ? "+1" : "-1";
}

int cmdSpectrum(const std::string& format, bool numeric, const std::string& outPath) {
  std::ostringstream os;
  if (format == "json") {
    os << spectrumToJson().dump(2) << "\n";
  } else {
    auto records = fullSpectrum();
    os << std::left << std::setw(4) << "k" << std::setw(4) << "r'" << std::setw(4)
       << "nu" << std::setw(6) << "mult" << "energy";
    if (numeric) os << std::string(46, ' ') << "numeric";
    os << "\n";
    long total = 0;
    for (const auto& rec : records) {
      std::string energy = rec.energy.str();
      os << std::left << std::setw(4) << rec.k << std::setw(4) << rec.rPrime
         << std::setw(4) << renderNu(rec.nu) << std::setw(6) << rec.multiplicity
         << energy;
      if (numeric) {
        if (energy.size() < 52) os << std::string(52 - energy.size(), ' ');
        os << std::setprecision(15) << rec.energyFloat;
      }
      os << "\n";
      total += rec.multiplicity;
    }
    os << "total levels (with multiplicity): " << total << "\n";
  }
  if (outPath.empty()) {
    std::cout << os.str();
  } else {
    std::ofstream f(outPath);
    if (!f) {
      std::cerr << "cannot open " << outPath << "\n";
      return 1;
    }
    f << os.str();
  }
  return 0;
}

int cmdVerify(const std::string& section, bool verbose) {
  VerifyReport report;
  if (section == "all") {
    report = verifyAll();
  } else {
    int s = 0;
    try {
      s = std::stoi(section);
    } catch (...) {
      std::cerr << "--section must be 2..7 or all\n";
      return 2;
    }
    if (s < 2 || s > 7) {
      std::cerr << "--section must be 2..7 or all\n";
      return 2;
    }
    report = verifySection(s);
  }
  report.print(std::cout, verbose);
  return report.allPass() ? 0 : 1;
}

int cmdGalois(const std::string& elementJson) {
  WreathElement g;
  try {
    g = wreathFromJson(Json::parse(elementJson));
  } catch (const std::exception& e) {
    std::cerr << "malformed group element: " << e.what() << "\n";
    return 2;
  }
  if (g == wreathIdentity(WreathVariant::ComplexTotal)) {
    std::cout << "identity permutation\n";
    return 0;
  }
  std::cout << "cyclic part: tau_" << g.l << "\n";
  std::cout << "energies:\n";
  for (const auto& rec : fullSpectrum()) {
    SpectrumRecord to = actOnRecord(g, rec);
    std::cout << "  E(k=" << rec.k << ", r'=" << rec.rPrime << ", nu=" << renderNu(rec.nu)
              << ") -> E(k=" << to.k << ", r'=" << to.rPrime << ", nu=" << renderNu(to.nu)
              << ")\n";
  }
  std::cout << "subfields:\n";
  for (DiscTag tag : allDiscTags()) {
    DiscTag to(tag.rPrime, kClassOf(g.l * tag.kClass));
    std::cout << "  H_{" << tag.rPrime << ",G}^" << tag.kClass << " -> H_{" << to.rPrime
              << ",G}^" << to.kClass << "\n";
  }
  std::cout << "density matrices:\n";
  for (DiscTag tag : allDiscTags()) {
    for (int nu : {+1, -1}) {
      DiscTag to(tag.rPrime, kClassOf(g.l * tag.kClass));
      int nuOut = signFor(g, tag) * nu;
      std::cout << "  rho(r'=" << tag.rPrime << ", k-class=" << tag.kClass
                << ", nu=" << (nu > 0 ? "+1" : "-1") << ") -> rho(r'=" << to.rPrime
                << ", k-class=" << to.kClass << ", nu=" << (nuOut > 0 ? "+1" : "-1")
                << ")\n";
    }
  }
  return 0;
}

int cmdExport(const std::string& outPath) {
  Json doc;
  doc["spectrum"] = spectrumToJson();
  Json blocks = Json::object();
  Json projectors = Json::object();
  Json sOperators = Json::object();
  Json densities = Json::object();
  for (int k = -3; k <= 3; ++k) {
    for (int r = 1; r <= 3; ++r) {
      auto orbits = orbitsAtMomentum(r, k);
      std::string key = "r=" + std::to_string(r) + ",k=" + std::to_string(k);
      blocks[key] = matrixToJson(fourierBlock(r, k), orbits, orbits);
    }
    if (k == 0) continue;
    auto o1 = orbitsAtMomentum(1, k), o2 = orbitsAtMomentum(2, k), o3 = orbitsAtMomentum(3, k);
    sOperators["S_{1,1}^" + std::to_string(k)] = matrixToJson(sBlock(1, 1, k), o2, o1);
    sOperators["S_{2,1}^" + std::to_string(k)] = matrixToJson(sBlock(2, 1, k), o3, o2);
    sOperators["S_{1,2}^" + std::to_string(k)] = matrixToJson(sBlock(1, 2, k), o3, o1);
    for (auto [r, rp] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {3, 1}, {3, 2}, {3, 3}}) {
      auto orbits = orbitsAtMomentum(r, k);
      std::string key =
          "P_{" + std::to_string(r) + "," + std::to_string(rp) + "}^" + std::to_string(k);
      projectors[key] = matrixToJson(projectorBlock(r, rp, k), orbits, orbits);
    }
    for (auto [r, rp] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {3, 3}}) {
      auto orbits = orbitsAtMomentum(r, k);
      DensityPair dp = densityMatrices(r, rp, k);
      std::string base =
          "rho_{" + std::to_string(r) + "," + std::to_string(rp) + ",";
      densities[base + "+1}^" + std::to_string(k)] = matrixToJson(dp.plus, orbits, orbits);
      densities[base + "-1}^" + std::to_string(k)] = matrixToJson(dp.minus, orbits, orbits);
    }
  }
  doc["blocks"] = blocks;
  doc["s_operators"] = sOperators;
  doc["projectors"] = projectors;
  doc["density_matrices"] = densities;

  if (outPath.empty()) {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::ofstream f(outPath);
    if (!f) {
      std::cerr << "cannot open " << outPath << "\n";
      return 1;
    }
    f << doc.dump(2) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact spectrum of the spin-1/2 XXX heptagon and its Galois structure"};
  app.require_subcommand(1);

  std::string format = "table", outPath, section = "all", elementJson;
  bool numeric = false, verbose = false;

  auto* spectrum = app.add_subcommand("spectrum", "print the 128-level exact spectrum");
  spectrum->add_option("--format", format, "table|json")
      ->check(CLI::IsMember({"table", "json"}));
  spectrum->add_flag("--numeric", numeric, "append 15-digit numeric energies");
  spectrum->add_option("--out", outPath, "write to a file instead of stdout");

  auto* verify = app.add_subcommand("verify", "run the verification suite");
  verify->add_option("--section", section, "2..7 or all");
  verify->add_flag("--verbose", verbose, "print expected/actual for passing checks too");

  auto* galois = app.add_subcommand("galois", "apply a Galois group element");
  galois
      ->add_option("element", elementJson,
                   R"(group element as JSON {"eps": [[1,-1,1],[1,1,1]], "l": 2})")
      ->required();

  auto* exportCmd = app.add_subcommand("export", "export spectrum and matrices as JSON");
  exportCmd->add_option("--out", outPath, "write to a file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp")
      return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    if (spectrum->parsed()) return cmdSpectrum(format, numeric, outPath);
    if (verify->parsed()) return cmdVerify(section, verbose);
    if (galois->parsed()) return cmdGalois(elementJson);
    if (exportCmd->parsed()) return cmdExport(outPath);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
