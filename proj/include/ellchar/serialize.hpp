#pragma once

// JSON forms of exact values. A CycNum becomes
// {"N": conductor, "coeffs": [[num, den], ...], "shadow": [re, im]}.

#include <json.hpp>

#include "ellchar/fingroup.hpp"

namespace ellchar {

using Json = nlohmann::ordered_json;

Json to_json(const Rat& r);  // "p/q" string
Json to_json(const CycNum& x);
Json to_json(const ClassFunction& f);
CycNum cycnum_from_json(const Json& j);

}  // namespace ellchar
