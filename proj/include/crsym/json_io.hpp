#ifndef CRSYM_JSON_IO_HPP
#define CRSYM_JSON_IO_HPP

#include <json.hpp>

#include "crsym/prolongation.hpp"
#include "crsym/reduced.hpp"

namespace crsym {

using Json = nlohmann::ordered_json;

/// Exact literals: rationals as "p/q" strings, complex values as
/// {"re": "p/q", "im": "p/q"}. with_float adds an "approx" pair for humans.
Json to_json(const Rational& q);
Json to_json(const GaussianRational& z, bool with_float = false);
Json to_json(const ExactMatrix& m, bool with_float = false);
Json to_json(const SymbolSpec& spec);
Json to_json(const ReducedDatum& datum, bool with_float = false);
Json to_json(const ProlongationReport& rep);

GaussianRational complex_from_json(const Json& j);
ExactMatrix matrix_from_json(const Json& j);
SymbolSpec spec_from_json(const Json& j);
ReducedDatum datum_from_json(const Json& j);

SymbolSpec load_spec_file(const std::string& path);

/// Minimal structural validator for the subset of JSON Schema shipped with
/// the reports (type/properties/required/items/enum/additionalProperties).
bool validate_schema(const Json& value, const Json& schema, std::string* error = nullptr);

}  // namespace crsym

#endif
