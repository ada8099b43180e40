#pragma once

#include <string>

#include "exalg/eval.hpp"

namespace exalg {

// JSON rendering of an evaluated value:
//   {"dimension": n, "field": "real"|"complex",
//    "terms": [{"indices": [..], "re": x, "im": y}, ...]}
// with ascending indices inside a term and terms sorted lexicographically.
// Subspace values use a "subspace" object with "dim" and "vectors" instead of
// "terms".  Coefficients serialize as shortest round-trip decimals, so
// re-ingesting reproduces the doubles bit-exactly.
std::string to_json_string(const Value& v, const SessionConfig& cfg);

// Re-ingest a multivector from the schema above.
Multivector multivector_from_json(const std::string& text);

}  // namespace exalg
