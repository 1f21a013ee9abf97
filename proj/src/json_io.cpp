#include "hepta/json_io.hpp"

#include <stdexcept>

namespace hepta {

namespace {

Json coeffArray(const Rat* data, int n) {
  Json a = Json::array();
  for (int i = 0; i < n; ++i) a.push_back(ratToString(data[i]));
  return a;
}

template <int N>
std::array<Rat, size_t(N)> coeffsFromJson(const Json& j) {
  if (!j.is_array() || j.size() != size_t(N))
    throw std::invalid_argument("expected " + std::to_string(N) + " coefficients");
  std::array<Rat, size_t(N)> out;
  for (int i = 0; i < N; ++i) out[size_t(i)] = ratFromString(j[size_t(i)].get<std::string>());
  return out;
}

}  // namespace

Json toJson(const Rat& x) {
  return Json{{"field", "Q"}, {"coeffs", Json::array({ratToString(x)})}};
}

Json toJson(const RhoNum& x) {
  return Json{{"field", "Q(rho)"}, {"coeffs", coeffArray(x.coeffs().data(), 3)}};
}

Json toJson(const CycNum& x) {
  return Json{{"field", "Q(w7)"}, {"coeffs", coeffArray(x.coeffs().data(), 6)}};
}

Json toJson(const DiscTag& tag) {
  return Json{{"rp", tag.rPrime}, {"k", tag.kClass}};
}

namespace {

template <class Base, int N>
Json quadToJson(const QuadNum<Base>& x) {
  Json coeffs = coeffArray(x.base().coeffs().data(), N);
  for (const Rat& c : x.rootCoeff().coeffs()) coeffs.push_back(ratToString(c));
  Json j{{"field", "quad"}, {"coeffs", coeffs}};
  if (x.tag()) j["tag"] = toJson(*x.tag());
  return j;
}

}  // namespace

Json toJson(const QuadRho& x) { return quadToJson<RhoNum, 3>(x); }
Json toJson(const QuadCyc& x) { return quadToJson<CycNum, 6>(x); }

Json toJson(const SpectrumRecord& rec) {
  Json energy{{"base", toJson(rec.energy.base())},
              {"root_coeff", toJson(rec.energy.rootCoeff())},
              {"disc", rec.energy.tag() ? toJson(*rec.energy.tag()) : Json(nullptr)}};
  return Json{{"k", rec.k},
              {"r", rec.r},
              {"r_prime", rec.rPrime},
              {"nu", rec.nu ? Json(*rec.nu) : Json(nullptr)},
              {"energy_exact", energy},
              {"energy_float", rec.energyFloat},
              {"multiplicity", rec.multiplicity}};
}

Rat ratFromJson(const Json& j) {
  if (j.value("field", "") != "Q") throw std::invalid_argument("not a Q element");
  return ratFromString(j.at("coeffs").at(0).get<std::string>());
}

RhoNum rhoFromJson(const Json& j) {
  if (j.value("field", "") != "Q(rho)") throw std::invalid_argument("not a Q(rho) element");
  auto c = coeffsFromJson<3>(j.at("coeffs"));
  return RhoNum(c[0], c[1], c[2]);
}

CycNum cycFromJson(const Json& j) {
  if (j.value("field", "") != "Q(w7)") throw std::invalid_argument("not a Q(w7) element");
  return CycNum(coeffsFromJson<6>(j.at("coeffs")));
}

DiscTag tagFromJson(const Json& j) {
  return DiscTag(j.at("rp").get<int>(), j.at("k").get<int>());
}

QuadRho quadRhoFromJson(const Json& j) {
  if (j.value("field", "") != "quad") throw std::invalid_argument("not a quad element");
  auto c = coeffsFromJson<6>(j.at("coeffs"));
  RhoNum base(c[0], c[1], c[2]), root(c[3], c[4], c[5]);
  if (root.isZero() || !j.contains("tag")) return QuadRho(base);
  return QuadRho(base, root, tagFromJson(j.at("tag")));
}

QuadCyc quadCycFromJson(const Json& j) {
  if (j.value("field", "") != "quad") throw std::invalid_argument("not a quad element");
  auto c = coeffsFromJson<12>(j.at("coeffs"));
  std::array<Rat, 6> b, r;
  for (int i = 0; i < 6; ++i) {
    b[size_t(i)] = c[size_t(i)];
    r[size_t(i)] = c[size_t(i + 6)];
  }
  CycNum base(b), root(r);
  if (root.isZero() || !j.contains("tag")) return QuadCyc(base);
  return QuadCyc(base, root, tagFromJson(j.at("tag")));
}

SpectrumRecord recordFromJson(const Json& j) {
  SpectrumRecord rec;
  rec.k = j.at("k").get<int>();
  rec.r = j.at("r").get<int>();
  rec.rPrime = j.at("r_prime").get<int>();
  if (!j.at("nu").is_null()) rec.nu = j.at("nu").get<int>();
  const Json& e = j.at("energy_exact");
  RhoNum base = rhoFromJson(e.at("base"));
  RhoNum root = rhoFromJson(e.at("root_coeff"));
  if (e.at("disc").is_null() || root.isZero())
    rec.energy = QuadRho(base);
  else
    rec.energy = QuadRho(base, root, tagFromJson(e.at("disc")));
  rec.energyFloat = j.at("energy_float").get<double>();
  rec.multiplicity = j.at("multiplicity").get<int>();
  return rec;
}

WreathElement wreathFromJson(const Json& j, WreathVariant v) {
  WreathElement g;
  g.variant = v;
  g.l = j.at("l").get<int>();
  const Json& eps = j.at("eps");
  if (!eps.is_array() || eps.size() != 2)
    throw std::invalid_argument("eps must be a 2x3 sign matrix");
  for (int row = 0; row < 2; ++row) {
    if (!eps[size_t(row)].is_array() || eps[size_t(row)].size() != 3)
      throw std::invalid_argument("eps must be a 2x3 sign matrix");
    for (int col = 0; col < 3; ++col) {
      int s = eps[size_t(row)][size_t(col)].get<int>();
      if (s != 1 && s != -1) throw std::invalid_argument("eps entries must be +-1");
      g.eps[size_t(row)][size_t(col)] = s;
    }
  }
  if (g.l < 1 || g.l > 6) throw std::invalid_argument("l must be a unit mod 7 in 1..6");
  return g;
}

namespace {

Json orbitLabels(const std::vector<Orbit>& orbits) {
  Json a = Json::array();
  for (const Orbit& o : orbits) a.push_back(o.t);
  return a;
}

template <class M, class F>
Json matrixJson(const M& m, const std::vector<Orbit>& rows,
                const std::vector<Orbit>& cols, F entry) {
  Json entries = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(entry(m(i, j)));
    entries.push_back(row);
  }
  return Json{{"rows", orbitLabels(rows)}, {"cols", orbitLabels(cols)}, {"entries", entries}};
}

}  // namespace

Json matrixToJson(const MatC& m, const std::vector<Orbit>& rowOrbits,
                  const std::vector<Orbit>& colOrbits) {
  return matrixJson(m, rowOrbits, colOrbits, [](const CycNum& x) { return toJson(x); });
}

Json matrixToJson(const MatQuadC& m, const std::vector<Orbit>& rowOrbits,
                  const std::vector<Orbit>& colOrbits) {
  return matrixJson(m, rowOrbits, colOrbits, [](const QuadCyc& x) { return toJson(x); });
}

Json spectrumToJson() {
  Json a = Json::array();
  for (const auto& rec : fullSpectrum()) a.push_back(toJson(rec));
  return a;
}

}  // namespace hepta
