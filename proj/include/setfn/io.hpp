#pragma once

#include <string>
#include <string_view>
#include <utility>

#include <json.hpp>

#include "setfn/iou_analysis.hpp"
#include "setfn/lovasz.hpp"
#include "setfn/set_function.hpp"
#include "setfn/submod_check.hpp"

namespace setfn {

using Json = nlohmann::json;
using OrderedJson = nlohmann::ordered_json;

/// Function file format: one JSON object with `kind` and `m` plus the
/// kind-specific fields (`values`, `y`, `cap`, `covers`, `edges`, an
/// optional `normalize` for tables, and `factor`/`inner` for the scaled and
/// negated wrappers the tool itself emits). Unknown fields are rejected.
SetFunction parse_function(const Json& doc);
SetFunction parse_function(std::string_view text);
SetFunction load_function_file(const std::string& path);

/// Canonical descriptor that parses back to an identical function.
OrderedJson function_descriptor(const SetFunction& f);

const char* check_mode_name(CheckMode mode);
CheckMode parse_check_mode(std::string_view name);
const char* witness_source_name(WitnessSource source);
const char* case_name(CounterexampleCase kind);

/// Sorted element list, e.g. {1,3} -> [1,3].
OrderedJson elements_json(const SubsetMask& s);
SubsetMask mask_from_elements(GroundSet ground, const Json& elements);

/// Certificate object: `mode`, `m`, `function` (descriptor echo), `A`, `B`
/// (sorted element lists), `x` (integer or null), `lhs`, `rhs`, `gap`
/// (exact rational strings).
OrderedJson certificate_report(const SetFunction& f, const ViolationCertificate& cert);
std::pair<SetFunction, ViolationCertificate> parse_certificate_report(const Json& doc);

/// Witness object: `u`, `v` as coordinate arrays, `le_u`, `le_v`, `le_mid`,
/// `deficit` as decimal strings, `source`.
OrderedJson witness_report(const ConvexityWitness& witness);

/// Configuration object: `case`, `m`, `Y`, `A`, `B`, `x`, `r`.
OrderedJson config_report(const CounterexampleConfig& config);

/// Shortest round-trip decimal form, identical to the JSON encoding.
std::string format_double(double value);

} // namespace setfn
