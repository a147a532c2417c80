#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "fatoukit/dynamics.hpp"
#include "fatoukit/escape.hpp"
#include "fatoukit/laws.hpp"
#include "fatoukit/normality.hpp"
#include "fatoukit/orbit.hpp"
#include "fatoukit/topology.hpp"

namespace fatoukit {

using json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "fatoukit-report";
inline constexpr int kReportVersion = 1;

json complex_json(cd z);
json window_json(const Window& w);
json family_json(const std::string& text, const FamilySpec& spec);
json params_json(const NormalityParams& np, const EscapeParams& ep, const OrbitLimits& ol);

/// Label counts over the whole grid (masked pixels counted separately, so
/// the four counts sum to width * height) and I/U areas.
json counts_json(const ClassificationMap& m);
json escape_json(const ClassificationMap& m, bool vacuous);

json connectedness_json(const ConnectednessReport& r);
json fixed_points_json(const std::vector<FixedPointRecord>& fps);
json limit_json(const LimitFunctionEstimate& e, int component);
json laws_json(const LawReport& r);

/// {code, message}; the code is VACUOUS, HEURISTIC or TRUNCATION when the
/// message says so, NOTICE otherwise.
json warning_json(const std::string& message);

/// Skeleton with schema id, version and command; sections are added by
/// the caller.
json report_header(const std::string& command);

/// Checks a document against the subset of JSON Schema used by the shipped
/// schema (type, required, properties, items, enum, const, minimum, local
/// $ref).
/// Returns one message per violation.
std::vector<std::string> validate_schema(const json& doc, const json& schema);

}  // namespace fatoukit
