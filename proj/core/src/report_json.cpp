#include "report_json.hpp"

#include <cmath>

namespace syncprim::detail {

Json predicate_to_json(const PredicateResult& result, bool timings) {
  Json out;
  if (result.value == TriState::Skipped) {
    out["value"] = "skipped";
    out["reason"] = result.reason;
  } else {
    out["value"] = result.value == TriState::True;
  }
  if (result.scanned > 0 || result.failing_map) out["scanned"] = result.scanned;
  if (result.visited > 0) out["visited"] = result.visited;
  if (result.failures > 1) out["failures"] = result.failures;

  Json witness = Json::object();
  if (result.failing_map) witness["f"] = format_image(*result.failing_map);
  if (result.pair) witness["pair"] = {format_set(result.pair->first), format_set(result.pair->second)};
  if (result.state_count) witness["state_count"] = *result.state_count;
  if (result.blocks) {
    Json classes = Json::array();
    for (PointSet c : result.blocks->classes) classes.push_back(members(c));
    witness["blocks"] = std::move(classes);
  }
  if (!witness.empty()) out["witness"] = std::move(witness);
  if (timings) out["millis"] = std::round(result.millis * 1000.0) / 1000.0;
  return out;
}

Json report_to_json(const ClassificationReport& report, bool timings) {
  Json out;
  out["schema"] = kReportSchema;
  out["name"] = report.name;
  out["degree"] = report.group.degree();
  Json generators = Json::array();
  for (const auto& g : report.group.generators()) generators.push_back(format_cycles(g));
  out["generators"] = std::move(generators);
  out["order"] = report.order ? Json(*report.order) : Json(nullptr);
  out["mode"] = to_string(report.mode);

  Json predicates;
  predicates["transitive"] = predicate_to_json(report.transitive, timings);
  predicates["primitive"] = predicate_to_json(report.primitive, timings);
  predicates["two_transitive"] = predicate_to_json(report.two_transitive, timings);
  predicates["four_transitive"] = predicate_to_json(report.four_transitive, timings);
  predicates["sync_maximal"] = predicate_to_json(report.sync_maximal, timings);
  predicates["completely_reachable_all_f"] =
      predicate_to_json(report.completely_reachable_all_f, timings);
  predicates["strongly_sync_maximal"] = predicate_to_json(report.strongly_sync_maximal, timings);
  Json conditions;
  for (std::size_t i = 0; i < report.conditions.size(); ++i)
    conditions[std::to_string(i + 1)] = predicate_to_json(report.conditions[i], timings);
  predicates["conditions"] = std::move(conditions);
  out["predicates"] = std::move(predicates);
  return out;
}

}  // namespace syncprim::detail
