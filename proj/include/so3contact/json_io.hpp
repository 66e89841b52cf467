#pragma once

// JSON encoding of invariant tuples and gluing plans.
//
// Tuple schema:
//   {"stabilizer_order": int,
//    "cross_section": {"genus": int, "boundary_count": int,
//                      "exceptional_orbits": [[a, b], ...],
//                      "euler_number": [num, den] | null},
//    "singular_components": ["ETriv" | "ETwist" | "RP2Bundle", ...],
//    "dehn_euler": int | null}
// Field order is irrelevant; unknown fields are rejected.

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "so3contact/invariants.hpp"

namespace so3contact {

/// Malformed input; `location()` is a JSON pointer to the offending value.
class SchemaError : public std::runtime_error {
 public:
  SchemaError(std::string location, const std::string& message);
  const std::string& location() const { return location_; }

 private:
  std::string location_;
};

nlohmann::json tuple_to_json(const InvariantTuple& t);
InvariantTuple tuple_from_json(const nlohmann::json& j);

/// Parses text (syntax errors are reported as SchemaError with the byte offset).
InvariantTuple parse_tuple(const std::string& text);

nlohmann::json plan_to_json(const GluingPlan& plan);

}  // namespace so3contact
