#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "syncprim/group.hpp"
#include "syncprim/perm.hpp"

namespace syncprim {

enum class TriState { True, False, Skipped };

std::string_view to_string(TriState value);
constexpr TriState tri(bool value) { return value ? TriState::True : TriState::False; }

/// Which maps f of rank n-1 a group-level predicate quantifies over.
enum class QuantifierMode { AllRankNMinus1, IdempotentsOnly };

std::string_view to_string(QuantifierMode mode);

/// Accepts "all" / "all_rank_n_minus_1" and "idempotents" / "idempotents_only".
QuantifierMode parse_quantifier_mode(std::string_view text);

std::vector<Transformation> quantifier_family(std::size_t n, QuantifierMode mode);

/// C(n,2) * n! or n(n-1); 0 for n < 2.
std::uint64_t quantifier_family_size(std::size_t n, QuantifierMode mode);

struct ScanOptions {
  std::size_t threads = 1;
  /// Stop at the least counterexample; otherwise count every failure.
  bool stop_at_first = true;
  std::size_t element_cap = kDefaultElementCap;
  /// Largest family of maps f a scan will materialize.
  std::uint64_t max_family_size = 20'000'000;
  /// Largest degree for the n^n scan of is_strongly_sync_maximal.
  std::size_t strong_degree_cap = 7;
};

struct PredicateResult {
  TriState value = TriState::Skipped;
  std::string reason;  // why it was skipped
  /// Maps f examined, counted up to and including the first failure.
  std::uint64_t scanned = 0;
  /// Maps visited before rank filtering (strongly sync-maximal only).
  std::uint64_t visited = 0;
  std::uint64_t failures = 0;
  std::optional<Transformation> failing_map;
  std::optional<std::pair<PointSet, PointSet>> pair;
  std::optional<std::uint64_t> state_count;
  std::optional<BlockSystem> blocks;
  double millis = 0;
};

/// Every f in the family yields a minimal DFA for Syn with 2^n - n states.
PredicateResult is_sync_maximal(const GroupSpec& group, QuantifierMode mode,
                                const ScanOptions& options = {});

/// The six equivalent characterizations of primitivity, index 1..6:
///  1 primitive; 2 completely reachable; 3 distinct 2-sets distinguishable;
///  4 distinct non-singleton sets distinguishable; 5 distinct non-singleton
///  sets separable by image cardinality; 6 disjoint 2-sets distinguishable.
/// 2..6 quantify over the maps f of the selected family.
PredicateResult condition(const GroupSpec& group, int index, QuantifierMode mode,
                          const ScanOptions& options = {});

/// For every f of rank 2..n-1, all 2-subsets are distinguishable. Scans all
/// n^n maps; skipped above options.strong_degree_cap.
PredicateResult is_strongly_sync_maximal(const GroupSpec& group, const ScanOptions& options = {});

struct ClassifyOptions {
  ScanOptions scan;
  QuantifierMode mode = QuantifierMode::IdempotentsOnly;
  bool conditions = true;
  bool strongly = true;
};

struct ClassificationReport {
  std::string name;
  GroupSpec group = GroupSpec::trivial(1);
  std::optional<std::uint64_t> order;
  QuantifierMode mode = QuantifierMode::IdempotentsOnly;
  PredicateResult transitive;
  PredicateResult primitive;
  PredicateResult two_transitive;
  PredicateResult four_transitive;
  PredicateResult sync_maximal;
  /// Condition 2 over all maps of rank n-1, whatever the mode.
  PredicateResult completely_reachable_all_f;
  PredicateResult strongly_sync_maximal;
  std::array<PredicateResult, 6> conditions;
};

/// Runs every predicate; anything over a cap is reported as skipped.
ClassificationReport classify(const GroupSpec& group, const ClassifyOptions& options = {},
                              std::string name = {});

inline constexpr std::string_view kReportSchema = "syncprim-report/1";

/// JSON document with schema "syncprim-report/1". Timings are included only
/// on request so that reports stay byte-for-byte reproducible.
std::string serialize_report(const ClassificationReport& report, bool timings = false,
                             int indent = 2);

}  // namespace syncprim
