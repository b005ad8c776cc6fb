#pragma once

// Line-delimited JSON records for machine-readable output. Field names are
// stable; docs/report-format.md lists them.

#include "json.hpp"

#include "mutpot/orbit.hpp"
#include "mutpot/upper_bound.hpp"
#include "mutpot/verify.hpp"

namespace mutpot {

nlohmann::json to_json(const LatticeVector& v);
nlohmann::json to_json(const LaurentnessVerdict& v);
nlohmann::json to_json(const MembershipReport& r);
nlohmann::json to_json(const GeneratorPresentation& g);
nlohmann::json to_json(const OrbitGraph& g);
nlohmann::json to_json(const SuiteResult& r);

/// Single-line JSON with a leading "record" field.
std::string jsonl(const std::string& record, nlohmann::json body);

}  // namespace mutpot
