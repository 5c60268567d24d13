#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "dlat/enumeration.hpp"
#include "dlat/properties.hpp"

namespace dlat {

// JSON objects use nlohmann's default std::map storage, so keys come out
// in alphabetical order. Sets and partitions use their brace print format.

nlohmann::json to_json(const SevenConditions& conditions);
nlohmann::json to_json(const PropertyReport& report);
nlohmann::json to_json(const TheoremVerdict& verdict);

/// Rows without timing; timing lives under a separate "timing_ms" key.
nlohmann::json census_to_json(const std::vector<EnumerationStats>& rows);

/// `key: value` lines with the same fields (dotted paths) as the JSON form.
std::string to_text(const PropertyReport& report);
std::string to_text(const TheoremVerdict& verdict);
std::string census_table(const std::vector<EnumerationStats>& rows);

}  // namespace dlat
