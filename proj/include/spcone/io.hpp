#pragma once

#include <string>

#include <json.hpp>

#include "spcone/solver.hpp"
#include "spcone/verifier.hpp"

namespace spcone {

using Json = nlohmann::json;

// JSON wire formats. FunctionFamily is {"kind": string, "p": number|null};
// cone points are {"u":..., "v":..., "W_packed":[...]} with the sqrt(2)
// packed convention; problems are
// {"family":..., "d":..., "c":[...], "A":[[...]], "b":[...], "x0":{...}}.

Json family_to_json(const FunctionFamily& f);
FunctionFamily family_from_json(const Json& j);

Json point_to_json(const ConePoint& pt);
ConePoint point_from_json(const Json& j);

Json problem_to_json(const ConicProblem& problem);
ConicProblem problem_from_json(const Json& j);

Json result_to_json(const SolveResult& result);
Json report_to_json(const TrialReport& report);

/// Parses a JSON document, rethrowing parse failures as ParseError with a
/// location diagnostic.
Json parse_json(const std::string& text, const std::string& origin);
Json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j, bool pretty);

}  // namespace spcone
