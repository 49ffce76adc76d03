#pragma once

#include <json.hpp>

#include "glq/algebra.hpp"
#include "glq/morphism.hpp"

namespace glq {

using Json = nlohmann::ordered_json;

// Canonical JSON forms. Coefficients that do not fit in 64 bits are written
// as decimal strings; the readers accept both.
Json to_json(const AlgebraSignature& sig);
Json to_json(const LaurentScalar& c);
Json to_json(const Polynomial& p);
Json to_json(const Morphism& f);

SignaturePtr signature_from_json(const Json& j);
LaurentScalar scalar_from_json(const Json& j);
Polynomial polynomial_from_json(const Json& j);
Morphism morphism_from_json(const Json& j);

/// "q*U_1*V_2^-1" style rendering of a scaled monomial.
std::string format_monomial(const AlgebraSignature& sig, const ScaledMonomial& m);

}  // namespace glq
