#pragma once

// JSON forms of the library's records. Rationals are always "num/den"
// strings, never floats.

#include <json.hpp>

#include "bprimes/density.hpp"
#include "bprimes/padic.hpp"
#include "bprimes/quadratic.hpp"
#include "bprimes/specialcase.hpp"

namespace bprimes {

/// {"a":"1/3","b":"1/3","c":"2/3","m":3,"B":[1],"phi":2,"density":"1/2"}
nlohmann::json to_json(const DensityRecord& record);

/// Inverse of to_json; throws std::invalid_argument if the fields disagree
/// with each other (density != |B|/phi, m != lcm of denominators, ...).
DensityRecord density_record_from_json(const nlohmann::json& doc);

/// Sorted integer array.
nlohmann::json to_json(const ModpSet& set);

/// {"p":23,"h":3}
nlohmann::json to_json(const ClassNumber& h);

nlohmann::json to_json(const DigitExpansion& expansion);

nlohmann::json to_json(const BoundednessVerdict& verdict);

nlohmann::json to_json(const BShape& shape);

}  // namespace bprimes
