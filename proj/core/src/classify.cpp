#include "syncprim/classify.hpp"

#include <chrono>

#include "report_json.hpp"
#include "syncprim/automaton.hpp"
#include "syncprim/error.hpp"
#include "syncprim/parallel.hpp"

namespace syncprim {

std::string_view to_string(TriState value) {
  switch (value) {
    case TriState::True:
      return "true";
    case TriState::False:
      return "false";
    case TriState::Skipped:
      break;
  }
  return "skipped";
}

std::string_view to_string(QuantifierMode mode) {
  return mode == QuantifierMode::AllRankNMinus1 ? "all_rank_n_minus_1" : "idempotents_only";
}

QuantifierMode parse_quantifier_mode(std::string_view text) {
  if (text == "all" || text == "all_rank_n_minus_1") return QuantifierMode::AllRankNMinus1;
  if (text == "idempotents" || text == "idempotents_only") return QuantifierMode::IdempotentsOnly;
  throw ParseError("unknown quantifier mode '" + std::string(text) + "'");
}

std::vector<Transformation> quantifier_family(std::size_t n, QuantifierMode mode) {
  return mode == QuantifierMode::AllRankNMinus1 ? enumerate_rank_n_minus_1(n)
                                                : enumerate_idempotents_rank_n_minus_1(n);
}

std::uint64_t quantifier_family_size(std::size_t n, QuantifierMode mode) {
  if (n < 2) return 0;
  if (mode == QuantifierMode::IdempotentsOnly) return std::uint64_t{n} * (n - 1);
  std::uint64_t total = std::uint64_t{n} * (n - 1) / 2;
  for (std::size_t i = 2; i <= n; ++i) {
    if (total > UINT64_MAX / i) return UINT64_MAX;
    total *= i;
  }
  return total;
}

namespace {

using Clock = std::chrono::steady_clock;

double millis_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

PredicateResult skipped(std::string reason) {
  PredicateResult result;
  result.reason = std::move(reason);
  return result;
}

// Scans the family, `holds(automaton)` deciding each f. On failure the least
// failing f is attached and `explain` adds the predicate-specific witness.
template <typename Holds, typename Explain>
PredicateResult scan_family(const GroupSpec& group, QuantifierMode mode, const ScanOptions& options,
                            bool needs_subsets, Holds holds, Explain explain) {
  const auto start = Clock::now();
  const std::size_t n = group.degree();
  if (needs_subsets && n > kSubsetDegreeCap)
    return skipped("degree " + std::to_string(n) + " exceeds subset cap " +
                   std::to_string(kSubsetDegreeCap));
  const std::uint64_t size = quantifier_family_size(n, mode);
  if (size > options.max_family_size)
    return skipped("family of " + std::to_string(size) + " maps exceeds limit " +
                   std::to_string(options.max_family_size));

  const std::vector<Transformation> family = quantifier_family(n, mode);
  const ScanOutcome outcome =
      parallel_scan(family.size(), options.threads, options.stop_at_first, [&](std::uint64_t i) {
        return !holds(build_group_automaton(group, family[i]));
      });

  PredicateResult result;
  result.failures = outcome.failures;
  if (outcome.first_failure) {
    const std::uint64_t index = *outcome.first_failure;
    result.value = TriState::False;
    result.scanned = options.stop_at_first ? index + 1 : family.size();
    result.failing_map = family[index];
    explain(build_group_automaton(group, family[index]), result);
  } else {
    result.value = TriState::True;
    result.scanned = family.size();
  }
  result.millis = millis_since(start);
  return result;
}

}  // namespace

PredicateResult is_sync_maximal(const GroupSpec& group, QuantifierMode mode,
                                const ScanOptions& options) {
  const std::uint64_t target = max_syn_state_count(group.degree());
  return scan_family(
      group, mode, options, true,
      [&](const SemiAutomaton& a) { return minimal_syn_dfa(a).state_count == target; },
      [](const SemiAutomaton& a, PredicateResult& r) {
        r.state_count = minimal_syn_dfa(a).state_count;
      });
}

PredicateResult condition(const GroupSpec& group, int index, QuantifierMode mode,
                          const ScanOptions& options) {
  auto attach_pair = [](const DistinguishVerdict& verdict, PredicateResult& r) {
    r.pair = verdict.witness;
  };
  switch (index) {
    case 1: {
      const auto start = Clock::now();
      PrimitivityResult primitivity = is_primitive(group);
      PredicateResult result;
      result.value = tri(primitivity.primitive);
      result.blocks = std::move(primitivity.blocks);
      result.millis = millis_since(start);
      return result;
    }
    case 2:
      return scan_family(
          group, mode, options, true,
          [](const SemiAutomaton& a) { return is_completely_reachable(a); },
          [](const SemiAutomaton& a, PredicateResult& r) {
            r.state_count = build_subset_automaton(a).states.size();
          });
    case 3:
      return scan_family(
          group, mode, options, false,
          [](const SemiAutomaton& a) { return all_2subsets_distinguishable(a).all_distinguishable; },
          [&](const SemiAutomaton& a, PredicateResult& r) {
            attach_pair(all_2subsets_distinguishable(a), r);
          });
    case 4:
      return scan_family(
          group, mode, options, true,
          [](const SemiAutomaton& a) {
            return all_nonsingleton_distinguishable(a).all_distinguishable;
          },
          [&](const SemiAutomaton& a, PredicateResult& r) {
            attach_pair(all_nonsingleton_distinguishable(a), r);
          });
    case 5:
      return scan_family(
          group, mode, options, true,
          [](const SemiAutomaton& a) {
            return all_nonsingleton_cardinality_distinguishable(a).all_distinguishable;
          },
          [&](const SemiAutomaton& a, PredicateResult& r) {
            attach_pair(all_nonsingleton_cardinality_distinguishable(a), r);
          });
    case 6:
      return scan_family(
          group, mode, options, false,
          [](const SemiAutomaton& a) {
            return disjoint_2subsets_distinguishable(a).all_distinguishable;
          },
          [&](const SemiAutomaton& a, PredicateResult& r) {
            attach_pair(disjoint_2subsets_distinguishable(a), r);
          });
    default:
      break;
  }
  throw Error("condition index must lie in 1..6");
}

PredicateResult is_strongly_sync_maximal(const GroupSpec& group, const ScanOptions& options) {
  const auto start = Clock::now();
  const std::size_t n = group.degree();
  if (n > options.strong_degree_cap)
    return skipped("scan of " + std::to_string(n) + "^" + std::to_string(n) +
                   " maps exceeds degree cap " + std::to_string(options.strong_degree_cap));
  const std::uint64_t total = map_count(n);
  auto eligible = [n](const Transformation& f) {
    const std::size_t r = f.rank();
    return r >= 2 && r + 1 <= n;
  };
  const ScanOutcome outcome =
      parallel_scan(total, options.threads, options.stop_at_first, [&](std::uint64_t i) {
        const Transformation f = map_from_index(n, i);
        if (!eligible(f)) return false;
        return !all_2subsets_distinguishable(build_group_automaton(group, f)).all_distinguishable;
      });

  PredicateResult result;
  result.failures = outcome.failures;
  const std::uint64_t visited =
      outcome.first_failure && options.stop_at_first ? *outcome.first_failure + 1 : total;
  result.visited = visited;
  for (std::uint64_t i = 0; i < visited; ++i)
    if (eligible(map_from_index(n, i))) ++result.scanned;
  if (outcome.first_failure) {
    result.value = TriState::False;
    result.failing_map = map_from_index(n, *outcome.first_failure);
    result.pair =
        all_2subsets_distinguishable(build_group_automaton(group, *result.failing_map)).witness;
  } else {
    result.value = TriState::True;
  }
  result.millis = millis_since(start);
  return result;
}

ClassificationReport classify(const GroupSpec& group, const ClassifyOptions& options,
                              std::string name) {
  ClassificationReport report;
  report.name = std::move(name);
  report.group = group;
  report.mode = options.mode;
  const std::size_t n = group.degree();

  try {
    report.order = enumerate_elements(group, options.scan.element_cap).size();
  } catch (const GroupTooLarge&) {
  }

  auto timed = [](auto&& compute) {
    const auto start = Clock::now();
    PredicateResult result;
    result.value = tri(compute());
    result.millis = millis_since(start);
    return result;
  };
  report.transitive = timed([&] { return is_transitive(group); });
  report.primitive = condition(group, 1, options.mode, options.scan);
  report.two_transitive = n >= 2 ? timed([&] { return is_k_transitive(group, 2); })
                                 : skipped("needs degree >= 2");
  report.four_transitive = n >= 4 ? timed([&] { return is_k_transitive(group, 4); })
                                  : skipped("needs degree >= 4");
  report.sync_maximal = is_sync_maximal(group, options.mode, options.scan);
  report.completely_reachable_all_f =
      condition(group, 2, QuantifierMode::AllRankNMinus1, options.scan);
  report.strongly_sync_maximal = options.strongly ? is_strongly_sync_maximal(group, options.scan)
                                                  : skipped("not requested");
  for (int i = 1; i <= 6; ++i) {
    auto& slot = report.conditions[static_cast<std::size_t>(i - 1)];
    if (i == 1)
      slot = report.primitive;
    else
      slot = options.conditions ? condition(group, i, options.mode, options.scan)
                                : skipped("not requested");
  }
  return report;
}

std::string serialize_report(const ClassificationReport& report, bool timings, int indent) {
  return detail::report_to_json(report, timings).dump(indent);
}

}  // namespace syncprim
