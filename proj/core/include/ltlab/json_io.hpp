#pragma once

// JSON interchange ({p, n, prec, val, unit_coeffs: [...]} for p-adic scalars)
// and text/JSON rendering of series, Lie elements and connection data for the
// CLI. Integer coefficients travel as decimal strings so no precision is lost
// to the JSON number type.

#include "ltlab/cm_connection.hpp"
#include "ltlab/division_algebra.hpp"
#include "ltlab/qsym.hpp"
#include "ltlab/series.hpp"

#include <json.hpp>

namespace ltlab {

using Json = nlohmann::json;

std::string rational_str(const Rational& r);
Rational rational_from_str(const std::string& s);

Json padic_to_json(const PadicFloat& x);
PadicFloat padic_from_json(const Json& j);

Json unramified_to_json(const UnramifiedElem& x);
// Reconstructs the modulus from {p, n, prec} unless one is supplied.
UnramifiedElem unramified_from_json(const Json& j, ModulusPtr mod = nullptr);

Json series_to_json(const UniSeries<RationalRing>& s);
Json series_to_json(const BiSeries<RationalRing>& s);
std::string series_str(const UniSeries<RationalRing>& s, const std::string& var = "T");

Json od_to_json(const ODElem& x);
Json lie_to_json(const GradedLieElem& x);
Json conn_to_json(const ConnCoeffs& x);
Json qsym_to_json(const QSymElem& x);

}  // namespace ltlab
