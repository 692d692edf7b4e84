#pragma once

#include <json.hpp>

#include "syncprim/classify.hpp"

namespace syncprim::detail {

using Json = nlohmann::ordered_json;

Json predicate_to_json(const PredicateResult& result, bool timings);
Json report_to_json(const ClassificationReport& report, bool timings);

}  // namespace syncprim::detail
