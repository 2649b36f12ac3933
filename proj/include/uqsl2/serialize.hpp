// JSON forms of actions, families and reports. Scalars and polynomials are
// written in the same text form the expression parser reads.
#pragma once

#include "uqsl2/catalog.hpp"
#include "uqsl2/classical.hpp"
#include "uqsl2/repr.hpp"

#include <nlohmann/json.hpp>

#include <map>
#include <string>

namespace uqsl2 {

using json = nlohmann::json;

json to_json(const Action& a);
/// Reads {alpha, beta, e_x, e_y, f_x, f_y}; throws std::invalid_argument on a
/// missing field, ParseError / EvalError on bad text.
Action action_from_json(const json& j);

/// Parameter names and their text values, e.g. {"b0": "1"}.
std::map<std::string, std::string> family_params(const SeriesFamily& f);
std::string family_text(const SeriesFamily& f);  // e.g. `EB0(b0=1)`
json to_json(const SeriesFamily& f);
/// Builds a family from a tag and parameter text. Missing distinguished
/// parameters default to 1, s and t to 0, signs to +. Throws
/// InvalidParameter on unknown names or bad values.
SeriesFamily family_from_params(FamilyTag tag, const std::map<std::string, std::string>& params);

json to_json(const AxiomReport& r, std::size_t max_failures = 50);
json to_json(const ClassificationSummary& s);
json to_json(const SeriesLabel& label, const ClassificationOutcome& o);
json to_json(const CompositionReport& r);
json to_json(const ClassicalAction& ca);
json to_json(const NoLimit& n);
json to_json(const Sl2Report& r);
json to_json(const IsoVerdict& v);

}  // namespace uqsl2
