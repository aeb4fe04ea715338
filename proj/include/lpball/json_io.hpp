#pragma once

#include <nlohmann/json.hpp>

#include "lpball/bounds.hpp"
#include "lpball/config.hpp"
#include "lpball/constructions.hpp"
#include "lpball/phi.hpp"
#include "lpball/search.hpp"

namespace lpball {

using nlohmann::json;

/// Exponent wire format: a number, or the string "inf".
json exponent_to_json(const Exponent& p);
Exponent exponent_from_json(const json& j);

/// PointConfig wire format, shared by all modules and the CLI:
/// { "p": number | "inf", "radius": number, "points": [[number,...],...] }
json to_json(const PointConfig& config);
PointConfig point_config_from_json(const json& j);

json to_json(const ValidationReport& report);
json to_json(const BoundResult& result);
json to_json(const Certificate& cert);
json to_json(const PhiNormReport& report);
json to_json(const SearchReport& report);

}  // namespace lpball
