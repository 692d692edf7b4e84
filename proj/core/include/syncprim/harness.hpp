#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "syncprim/automaton.hpp"
#include "syncprim/classify.hpp"
#include "syncprim/group.hpp"

namespace syncprim {

inline constexpr std::string_view kVersion = "0.3.0";

struct CatalogEntry {
  std::string name;
  GroupSpec group;
  std::optional<bool> transitive;
  std::optional<bool> primitive;
};

/// Deterministic list for every degree 1..max_degree: trivial, cyclic,
/// dihedral, symmetric and alternating groups, the degree-4 counterexample
/// <(0 1 2)>, the Klein four group, wreath-product block groups at 4 and 6,
/// and a handful of small primitive affine and projective groups.
std::vector<CatalogEntry> builtin_catalog(std::size_t max_degree);

/// Every subgroup of S_n (n <= 5), found by closing all pairs of elements and
/// deduplicating by element set. Ordered by group order, then element list.
std::vector<CatalogEntry> subgroup_census(std::size_t n);

/// splitmix64: state += 0x9e3779b97f4a7c15; z = state;
/// z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9; z = (z ^ (z >> 27)) * 0x94d049bb133111eb;
/// return z ^ (z >> 31).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  /// Uniform in [0, bound) by rejection; bound > 0.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::uint64_t state_;
};

/// Degree uniform in [min_degree, max_degree], letter count uniform in
/// [min_letters, max_letters], every image entry uniform in [n].
SemiAutomaton random_automaton(SplitMix64& rng, std::size_t min_degree, std::size_t max_degree,
                               std::size_t min_letters, std::size_t max_letters);

Transformation random_permutation(SplitMix64& rng, std::size_t n);

enum class VerifyMode { IdempotentsOnly, AllMaps, Both };

VerifyMode parse_verify_mode(std::string_view text);
std::string_view to_string(VerifyMode mode);

struct VerifyOptions {
  std::size_t max_degree = 5;
  VerifyMode mode = VerifyMode::Both;
  ScanOptions scan;
  /// Include every subgroup of S_3 and S_4 (within max_degree).
  bool census = true;
  /// Degree limit for the all-maps sync-maximality check.
  std::size_t all_maps_max_degree = 5;
};

struct CheckTally {
  std::string name;
  std::uint64_t checked = 0;
  std::uint64_t violations = 0;
};

struct VerifySummary {
  std::vector<CheckTally> checks;
  /// Known small-degree exceptions: conditions 5 and 6 below degree 5, and
  /// 4-transitive groups of degree 4 failing strong sync-maximality.
  std::vector<std::string> expected_divergences;
  /// Set when a check failed; the battery stops at the first violation.
  std::optional<std::string> violation;
  std::size_t groups = 0;

  bool ok() const noexcept { return !violation; }
  std::string to_json(int indent = 2) const;
};

/// The equivalence battery over catalog groups with 3 <= n <= max_degree
/// plus the subgroup census. Throws Error when max_degree > 6.
VerifySummary verify_theorems(const VerifyOptions& options);

/// Same battery over an explicit list of entries.
VerifySummary verify_theorems(const std::vector<CatalogEntry>& entries,
                              const VerifyOptions& options);

struct SearchOptions {
  std::size_t min_degree = 4;
  std::size_t max_degree = 5;
  ScanOptions scan;
  std::size_t random_subgroups = 0;  // per degree
  std::uint64_t seed = 1;
  /// Entry-name hashes to skip (see entry_hash).
  std::set<std::uint64_t> completed;
  bool timings = false;
};

struct ExperimentRecord {
  std::string entry;
  std::uint64_t entry_hash = 0;
  std::string version;
  ClassificationReport report;
  bool primitive_not_strong = false;
  bool strong_not_four_transitive = false;
  double millis = 0;
};

/// FNV-1a 64 of the entry name.
std::uint64_t entry_hash(std::string_view name);

struct SearchSummary {
  std::size_t records = 0;
  std::size_t skipped = 0;
  std::size_t primitive_not_strong = 0;
  std::size_t strong_not_four_transitive = 0;
  /// Set when a strongly sync-maximal group turned out imprimitive.
  std::optional<std::string> violation;
};

/// Classifies each catalog group (plus optional random subgroups) in the
/// degree range and hands every record to `sink` in catalog order.
/// Throws Error for degrees above 7.
SearchSummary search_strongly_sync_maximal(
    const SearchOptions& options, const std::function<void(const ExperimentRecord&)>& sink);

/// One line of the campaign log.
std::string serialize_record(const ExperimentRecord& record, bool timings);

/// Reads entry hashes back from a campaign log, ignoring malformed lines.
std::set<std::uint64_t> completed_entries(std::string_view log);

}  // namespace syncprim
