#pragma once
//
// Declarative experiment runner: JSON scenario configs validated against a
// fixed schema, deterministic run records, and report emission in machine
// (line-delimited JSON, stable field order, no timing) and human form.
// Negative scientific verdicts (gap growth, non-minimality, not-found) are
// ordinary outputs; only execution problems raise errors.

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "hyperlab/system.hpp"

namespace hyperlab {

using Json = nlohmann::ordered_json;

struct ValidationResult {
  bool ok = false;
  std::vector<std::string> problems;
};

// One scenario object: checks name/system/operation/params and the
// per-operation parameter schema; problems name the offending keys.
ValidationResult validate_scenario(const Json& scenario);

// A config file: a single scenario object or a nonempty array of them.
ValidationResult validate_scenario_document(const Json& doc);

// Executes one validated scenario and returns its run record:
//   { scenario, outputs, verdicts, error_budget, timing }
// Throws std::invalid_argument on validation failure.
Json run_scenario_json(const Json& scenario);

// All scenarios of a config document, in order.
std::vector<Json> run_scenario_document(const Json& doc);

// Machine format: one JSON object per line, insertion-ordered keys, timing
// excluded. Byte-identical across runs of the same config and build.
std::string emit_machine(const Json& record);

// Human-readable summary.
std::string emit_table_text(const Json& record);

// Tabular exports: (file suffix, CSV content) pairs, e.g. ("gaps.csv", ...).
std::vector<std::pair<std::string, std::string>> emit_csv(const Json& record);

// JSON encoding of points: {"base","shift"} / {"word","lo"} / {"x","y"}.
Json point_to_json(const Point& p);
Point point_from_json(const SystemSpec& sys, const Json& j);
SystemSpec system_from_json(const Json& j);

}  // namespace hyperlab
