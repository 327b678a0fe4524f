#pragma once

// Report serialization: aligned text tables, CSV, and canonical JSON
// (sorted keys, compact, weights as arrays of exact "p/q" strings).

#include "schubss/coxfeas.hpp"
#include "schubss/ssgit.hpp"
#include "schubss/verify.hpp"

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace schubss {

enum class Format { text, json, csv };

Format parse_format(std::string_view text);

nlohmann::json weight_to_json(const Weight& w);
/// Inverse of weight_to_json; throws UsageError on malformed input.
Weight weight_from_json(const nlohmann::json& j);

nlohmann::json to_json(const MinimalSetReport& report);
nlohmann::json to_json(const RootSystem& rs, const std::vector<CoxeterReport>& reports);
nlohmann::json to_json(const SuiteResult& result);
nlohmann::json fundamental_weights_json(const RootSystem& rs);

/// Canonical byte form; parse(canonical(j)) re-serializes identically.
std::string canonical(const nlohmann::json& j);

std::string render(const MinimalSetReport& report, Format format);
std::string render(const RootSystem& rs, const std::vector<CoxeterReport>& reports, Format format);
std::string render(const SuiteResult& result, Format format);
std::string render_fundamental_weights(const RootSystem& rs, Format format);

}  // namespace schubss
