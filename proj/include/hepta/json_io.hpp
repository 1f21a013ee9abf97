#pragma once

#include <json.hpp>

#include "hepta/galois.hpp"

// JSON schemas.
//
// Field elements: {"field": "Q"|"Q(rho)"|"Q(w7)"|"quad",
//                  "coeffs": ["p/q", ...],
//                  "tag": {"rp": 2|3, "k": 1|2|4}}   (tag for "quad" only)
// A "quad" element concatenates base and root coefficients; length 6 means
// a quadratic extension of Q(rho), length 12 of Q(w7).
//
// Spectrum records: exact energy as {"base": <Q(rho) element>,
// "root_coeff": <Q(rho) element>, "disc": tag-or-null}.

namespace hepta {

using Json = nlohmann::json;

Json toJson(const Rat& x);
Json toJson(const RhoNum& x);
Json toJson(const CycNum& x);
Json toJson(const QuadRho& x);
Json toJson(const QuadCyc& x);
Json toJson(const DiscTag& tag);
Json toJson(const SpectrumRecord& rec);

Rat ratFromJson(const Json& j);
RhoNum rhoFromJson(const Json& j);
CycNum cycFromJson(const Json& j);
QuadRho quadRhoFromJson(const Json& j);
QuadCyc quadCycFromJson(const Json& j);
DiscTag tagFromJson(const Json& j);
SpectrumRecord recordFromJson(const Json& j);

WreathElement wreathFromJson(const Json& j, WreathVariant v = WreathVariant::ComplexTotal);

// Matrix with orbit labels, per the heptagon export schema.
Json matrixToJson(const MatC& m, const std::vector<Orbit>& rowOrbits,
                  const std::vector<Orbit>& colOrbits);
Json matrixToJson(const MatQuadC& m, const std::vector<Orbit>& rowOrbits,
                  const std::vector<Orbit>& colOrbits);

Json spectrumToJson();

}  // namespace hepta
