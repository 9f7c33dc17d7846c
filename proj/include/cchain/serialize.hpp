#pragma once

// JSON records for breakdowns and census reports. Counts are emitted as
// decimal strings when they can exceed 64 bits, as integers otherwise.

#include <nlohmann/json.hpp>

#include "cchain/census.hpp"
#include "cchain/counting.hpp"

namespace cchain {

nlohmann::json to_json(const GammaBreakdown& g);
nlohmann::json to_json(const DeltaBreakdown& d);
nlohmann::json to_json(const ShapeCensusReport& r);
nlohmann::json to_json(const CensusReport& r);
nlohmann::json to_json(const GenerativeReport& r);
nlohmann::json to_json(const CalibrationReport& r);

/// Inverse of to_json(CensusReport) for the fields the cache keeps.
CensusReport census_from_json(const nlohmann::json& j);

}  // namespace cchain
