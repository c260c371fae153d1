#pragma once

#include <string>

#include <json.hpp>

#include "braces/constructors.hpp"
#include "braces/series.hpp"
#include "braces/skew_brace.hpp"
#include "braces/ybe.hpp"

namespace braces {

using Json = nlohmann::ordered_json;

Json group_to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const Json& j);

Json brace_to_json(const SkewBrace& b);
SkewBrace brace_from_json(const Json& j);

Json solution_to_json(const Solution& s);
Solution solution_from_json(const Json& j);

/// {"brace_id", "applicable", "m", "r", "left_class", "right_class",
///  "bound", "pass"}
Json verdict_to_json(const std::string& brace_id, const Verdict& v,
                     std::optional<int> left_class);

Json series_report_to_json(const SeriesReport& r);

/// One JSON-lines catalog entry: the brace plus source metadata.
Json catalog_entry_to_json(const SkewBrace& b, const std::string& source,
                           const std::string& add_name, const std::string& mul_name);

/// Identifies the isomorphism class name of a group of order <= 8.
std::string group_class_name(const FiniteGroup& g);

}  // namespace braces
