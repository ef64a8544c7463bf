#pragma once

#include "virasoro/biseries.hpp"
#include "virasoro/cohomology.hpp"
#include "virasoro/delta.hpp"
#include "virasoro/exchange.hpp"
#include "virasoro/ope.hpp"
#include "virasoro/report.hpp"

namespace virasoro {

// Canonical JSON forms: integer keys rendered as strings in ascending
// order, rationals as "p/q", polynomials in c as degree -> rational maps.
// Serialization is bit-stable so golden files and report diffs stay exact.

Json to_json(const Rational& value);
Json to_json(const CentralScalar& value);
Json to_json(const LaurentPoly& value);
Json to_json(const BiSeries& value);
Json to_json(const DeltaExpansion& value);
Json to_json(const ModeElement& value);
Json to_json(const VirasoroElement& value);
Json to_json(const OpeData& value);
Json to_json(const ExchangeReport& value);
Json to_json(const CocycleSolveReport& value);

CentralScalar scalar_from_json(const Json& value);
LaurentPoly laurent_from_json(const Json& value);
DeltaExpansion delta_expansion_from_json(const Json& value);

/// Parses the OPE declaration format: declared fields with name and weight,
/// and the singular part as pole order -> term records. Weight bookkeeping
/// is validated on load.
OpeData ope_from_json(const Json& value);

}  // namespace virasoro
