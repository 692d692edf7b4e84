#include "syncprim/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <sstream>

#include "report_json.hpp"
#include "syncprim/error.hpp"

namespace syncprim {

namespace {

bool is_prime(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Transformation cycle_of(std::size_t n, std::vector<Point> points) {
  return Transformation::from_cycles(n, {std::move(points)});
}

Transformation full_cycle(std::size_t n) {
  std::vector<Point> points(n);
  for (std::size_t i = 0; i < n; ++i) points[i] = static_cast<Point>(i);
  return cycle_of(n, std::move(points));
}

Transformation cycles(std::size_t n, std::string_view text) { return parse_permutation(text, n); }

CatalogEntry entry(std::string name, std::size_t n, std::vector<Transformation> gens,
                   std::optional<bool> transitive, std::optional<bool> primitive) {
  return {std::move(name), GroupSpec(n, std::move(gens)), transitive, primitive};
}

}  // namespace

std::vector<CatalogEntry> builtin_catalog(std::size_t max_degree) {
  if (max_degree > kMaxDegree) throw DegreeCapExceeded(max_degree, kMaxDegree);
  std::vector<CatalogEntry> out;
  for (std::size_t n = 1; n <= max_degree; ++n) {
    const std::string suffix = std::to_string(n);
    out.push_back(entry("trivial-" + suffix, n, {Transformation::identity(n)}, n == 1, n <= 2));
    if (n >= 2) out.push_back(entry("C" + suffix, n, {full_cycle(n)}, true, n == 2 || is_prime(n)));
    if (n >= 3) {
      std::vector<Point> reflection(n);
      for (std::size_t i = 0; i < n; ++i) reflection[i] = static_cast<Point>((n - i) % n);
      out.push_back(entry("D" + suffix, n, {full_cycle(n), Transformation(reflection)}, true,
                          is_prime(n)));
    }
    if (n >= 4) {
      // (1 2 ... n-1) is even exactly when n is even
      std::vector<Point> tail;
      for (std::size_t i = (n % 2 == 0) ? 1 : 0; i < n; ++i) tail.push_back(static_cast<Point>(i));
      out.push_back(entry("A" + suffix, n, {cycles(n, "(0 1 2)"), cycle_of(n, tail)}, true, true));
    }
    if (n >= 3) out.push_back(entry("S" + suffix, n, {cycles(n, "(0 1)"), full_cycle(n)}, true, true));

    switch (n) {
      case 4:
        out.push_back(entry("appendix-4", 4, {cycles(4, "(0 1 2)(3)")}, false, false));
        out.push_back(entry("klein-4", 4, {cycles(4, "(0 1)(2 3)"), cycles(4, "(0 2)(1 3)")}, true,
                            false));
        out.push_back(
            entry("S2wrS2-4", 4, {cycles(4, "(0 1)"), cycles(4, "(0 2)(1 3)")}, true, false));
        break;
      case 5:
        out.push_back(
            entry("AGL1-5", 5, {cycles(5, "(0 1 2 3 4)"), cycles(5, "(1 2 4 3)")}, true, true));
        break;
      case 6:
        out.push_back(entry("S2wrS3-6", 6,
                            {cycles(6, "(0 1)"), cycles(6, "(0 2 4)(1 3 5)"),
                             cycles(6, "(0 2)(1 3)")},
                            true, false));
        out.push_back(entry("S3wrS2-6", 6,
                            {cycles(6, "(0 1 2)"), cycles(6, "(0 1)"), cycles(6, "(0 3)(1 4)(2 5)")},
                            true, false));
        // projective line over GF(5), infinity = 5
        out.push_back(entry("PSL2-5", 6, {cycles(6, "(0 1 2 3 4)"), cycles(6, "(0 5)(1 4)")},
                            true, true));
        out.push_back(entry("PGL2-5", 6,
                            {cycles(6, "(0 1 2 3 4)"), cycles(6, "(0 5)(1 4)"),
                             cycles(6, "(1 2 4 3)")},
                            true, true));
        break;
      case 7:
        out.push_back(entry("F21-7", 7, {full_cycle(7), cycles(7, "(1 2 4)(3 6 5)")}, true, true));
        out.push_back(
            entry("AGL1-7", 7, {full_cycle(7), cycles(7, "(1 3 2 6 4 5)")}, true, true));
        // collineations of the Fano plane with lines {i, i+1, i+3}
        out.push_back(entry("PSL3-2", 7, {full_cycle(7), cycles(7, "(2 4)(5 6)")}, true, true));
        break;
      default:
        break;
    }
  }
  return out;
}

std::vector<CatalogEntry> subgroup_census(std::size_t n) {
  if (n < 1 || n > 5) throw Error("subgroup census supports degrees 1..5");
  const std::vector<Transformation> all = enumerate_permutations(n);
  std::map<std::vector<Transformation>, std::vector<Transformation>> found;
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i; j < all.size(); ++j) {
      std::vector<Transformation> gens{all[i]};
      if (j != i) gens.push_back(all[j]);
      std::vector<Transformation> elements = enumerate_elements(GroupSpec(n, gens));
      std::sort(elements.begin(), elements.end());
      found.try_emplace(std::move(elements), std::move(gens));
    }
  }
  std::vector<std::pair<std::vector<Transformation>, std::vector<Transformation>>> ordered(
      found.begin(), found.end());
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    return a.first.size() < b.first.size();
  });

  std::vector<CatalogEntry> out;
  for (std::size_t i = 0; i < ordered.size(); ++i) {
    char name[32];
    std::snprintf(name, sizeof name, "S%zu-sub-%02zu", n, i);
    out.push_back({name, GroupSpec(n, ordered[i].second), std::nullopt, std::nullopt});
  }
  return out;
}

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  if (bound == 0) throw Error("empty range");
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x = next();
  while (x >= limit) x = next();
  return x % bound;
}

SemiAutomaton random_automaton(SplitMix64& rng, std::size_t min_degree, std::size_t max_degree,
                               std::size_t min_letters, std::size_t max_letters) {
  const std::size_t n = min_degree + rng.below(max_degree - min_degree + 1);
  const std::size_t k = min_letters + rng.below(max_letters - min_letters + 1);
  std::vector<Transformation> letters;
  for (std::size_t a = 0; a < k; ++a) {
    std::vector<Point> image(n);
    for (auto& p : image) p = static_cast<Point>(rng.below(n));
    letters.emplace_back(std::move(image));
  }
  return SemiAutomaton(n, std::move(letters));
}

Transformation random_permutation(SplitMix64& rng, std::size_t n) {
  std::vector<Point> image(n);
  for (std::size_t i = 0; i < n; ++i) image[i] = static_cast<Point>(i);
  for (std::size_t i = n; i > 1; --i) std::swap(image[i - 1], image[rng.below(i)]);
  return Transformation(std::move(image));
}

VerifyMode parse_verify_mode(std::string_view text) {
  if (text == "both") return VerifyMode::Both;
  if (text == "all" || text == "all_rank_n_minus_1") return VerifyMode::AllMaps;
  if (text == "idempotents" || text == "idempotents_only") return VerifyMode::IdempotentsOnly;
  throw ParseError("unknown verify mode '" + std::string(text) + "'");
}

std::string_view to_string(VerifyMode mode) {
  switch (mode) {
    case VerifyMode::IdempotentsOnly:
      return "idempotents_only";
    case VerifyMode::AllMaps:
      return "all_rank_n_minus_1";
    case VerifyMode::Both:
      break;
  }
  return "both";
}

namespace {

std::string describe(const PredicateResult& r) {
  std::string out(to_string(r.value));
  if (r.failing_map) out += " f=[" + format_image(*r.failing_map) + "]";
  if (r.pair) out += " pair=" + format_set(r.pair->first) + "/" + format_set(r.pair->second);
  if (r.state_count) out += " states=" + std::to_string(*r.state_count);
  if (r.blocks) out += " blocks=" + r.blocks->to_string();
  return out;
}

class Battery {
 public:
  explicit Battery(VerifySummary& summary) : summary_(summary) {}

  // Records one check; returns false once a violation has been recorded.
  bool check(const std::string& name, bool holds, const std::string& detail) {
    auto it = std::find_if(summary_.checks.begin(), summary_.checks.end(),
                           [&](const CheckTally& t) { return t.name == name; });
    if (it == summary_.checks.end()) {
      summary_.checks.push_back({name});
      it = summary_.checks.end() - 1;
    }
    ++it->checked;
    if (!holds) {
      ++it->violations;
      summary_.violation = name + ": " + detail;
    }
    return holds;
  }

 private:
  VerifySummary& summary_;
};

struct ModeFacts {
  QuantifierMode mode;
  PredicateResult sync_maximal;
  std::array<PredicateResult, 6> conditions;
};

}  // namespace

VerifySummary verify_theorems(const VerifyOptions& options) {
  if (options.max_degree > 6) throw Error("verify supports max degree <= 6");
  std::vector<CatalogEntry> entries;
  for (auto& e : builtin_catalog(options.max_degree))
    if (e.group.degree() >= 3) entries.push_back(std::move(e));
  if (options.census)
    for (std::size_t n = 3; n <= std::min<std::size_t>(4, options.max_degree); ++n)
      for (auto& e : subgroup_census(n)) entries.push_back(std::move(e));
  return verify_theorems(entries, options);
}

VerifySummary verify_theorems(const std::vector<CatalogEntry>& entries,
                              const VerifyOptions& options) {
  VerifySummary summary;
  Battery battery(summary);
  const ScanOptions& scan = options.scan;

  for (const CatalogEntry& e : entries) {
    const GroupSpec& g = e.group;
    const std::size_t n = g.degree();
    if (n > 6) throw Error("verify supports degrees <= 6 (entry " + e.name + ")");
    ++summary.groups;
    const std::string who = e.name + " " + format_group(g) + ": ";

    const bool transitive = is_transitive(g);
    const PredicateResult primitive = condition(g, 1, QuantifierMode::IdempotentsOnly, scan);
    const bool prim = primitive.value == TriState::True;

    if (e.transitive &&
        !battery.check("catalog transitive flag", *e.transitive == transitive,
                       who + "expected transitive=" + (*e.transitive ? "true" : "false")))
      return summary;
    if (e.primitive && !battery.check("catalog primitive flag", *e.primitive == prim,
                                      who + "expected primitive=" +
                                          (*e.primitive ? "true" : "false") + ", got " +
                                          describe(primitive)))
      return summary;
    if (n > 2 && prim &&
        !battery.check("primitive implies transitive", transitive, who + "primitive, intransitive"))
      return summary;

    std::vector<ModeFacts> facts;
    const bool want_idempotents = options.mode != VerifyMode::AllMaps;
    const bool want_all = options.mode != VerifyMode::IdempotentsOnly &&
                          n <= options.all_maps_max_degree;
    for (QuantifierMode mode : {QuantifierMode::IdempotentsOnly, QuantifierMode::AllRankNMinus1}) {
      if (mode == QuantifierMode::IdempotentsOnly ? !want_idempotents : !want_all) continue;
      ModeFacts f{mode, is_sync_maximal(g, mode, scan), {}};
      f.conditions[0] = primitive;
      for (int i = 2; i <= 6; ++i) f.conditions[static_cast<std::size_t>(i - 1)] = condition(g, i, mode, scan);
      const std::string tag = " [" + std::string(to_string(mode)) + "]";

      if (!battery.check("sync_maximal == primitive" + tag, (f.sync_maximal.value == TriState::True) == prim,
                         who + "primitive=" + describe(primitive) + ", sync_maximal=" +
                             describe(f.sync_maximal)))
        return summary;
      for (int i = 2; i <= 4; ++i) {
        const auto& c = f.conditions[static_cast<std::size_t>(i - 1)];
        if (!battery.check("condition " + std::to_string(i) + " == primitive" + tag,
                           (c.value == TriState::True) == prim,
                           who + "primitive=" + describe(primitive) + ", condition " +
                               std::to_string(i) + "=" + describe(c)))
          return summary;
      }
      for (int i = 5; i <= 6; ++i) {
        const auto& c = f.conditions[static_cast<std::size_t>(i - 1)];
        const bool agrees = (c.value == TriState::True) == prim;
        if (n >= 5) {
          if (!battery.check("condition " + std::to_string(i) + " == primitive (n >= 5)" + tag,
                             agrees,
                             who + "primitive=" + describe(primitive) + ", condition " +
                                 std::to_string(i) + "=" + describe(c)))
            return summary;
        } else if (!agrees) {
          summary.expected_divergences.push_back(e.name + ": condition " + std::to_string(i) +
                                                 "=" + std::string(to_string(c.value)) +
                                                 " while primitive=" +
                                                 std::string(to_string(primitive.value)) +
                                                 " at n=" + std::to_string(n) + tag);
        }
      }
      const auto value = [&](int i) {
        return f.conditions[static_cast<std::size_t>(i - 1)].value == TriState::True;
      };
      if (!battery.check("implications (4) => (5) => (6)" + tag,
                         (!value(4) || value(5)) && (!value(5) || value(6)),
                         who + "conditions 4,5,6 = " + describe(f.conditions[3]) + ", " +
                             describe(f.conditions[4]) + ", " + describe(f.conditions[5])))
        return summary;
      facts.push_back(std::move(f));
    }
    if (facts.size() == 2 &&
        !battery.check("sync_maximal mode invariance",
                       facts[0].sync_maximal.value == facts[1].sync_maximal.value,
                       who + describe(facts[0].sync_maximal) + " vs " +
                           describe(facts[1].sync_maximal)))
      return summary;

    const PredicateResult reachable = condition(
        g, 2,
        options.mode == VerifyMode::IdempotentsOnly ? QuantifierMode::IdempotentsOnly
                                                    : QuantifierMode::AllRankNMinus1,
        scan);
    if (!battery.check("completely reachable for every f == primitive",
                       (reachable.value == TriState::True) == prim,
                       who + "primitive=" + describe(primitive) + ", reachable=" +
                           describe(reachable)))
      return summary;

    const PredicateResult strong = is_strongly_sync_maximal(g, scan);
    if (strong.value != TriState::Skipped) {
      if (!battery.check("strongly sync-maximal => primitive",
                         strong.value != TriState::True || prim,
                         who + "strong=" + describe(strong)))
        return summary;
      // at n = 4 the 2+2 kernel keeps disjoint 2-sets indistinguishable
      if (n >= 4 && is_k_transitive(g, 4)) {
        if (n >= 5) {
          if (!battery.check("4-transitive => strongly sync-maximal (n >= 5)",
                             strong.value == TriState::True, who + "strong=" + describe(strong)))
            return summary;
        } else if (strong.value != TriState::True) {
          summary.expected_divergences.push_back(e.name +
                                                 ": 4-transitive but strongly sync-maximal=" +
                                                 describe(strong) + " at n=4");
        }
      }
    }

    if (transitive) {
      const auto elements = enumerate_elements(g, scan.element_cap);
      bool separated = true;
      std::string detail;
      for (PointSet a = 1; a <= full_set(n) && separated; ++a)
        for (PointSet b = 1; b <= full_set(n); ++b) {
          if (static_cast<std::size_t>(cardinality(a) * cardinality(b)) >= n) continue;
          if (!find_separator(elements, a, b)) {
            separated = false;
            detail = who + "no g with g(A) and B disjoint for A=" + format_set(a) +
                     ", B=" + format_set(b);
            break;
          }
        }
      if (!battery.check("separation |A||B| < n", separated, detail)) return summary;
    }
  }
  return summary;
}

std::string VerifySummary::to_json(int indent) const {
  detail::Json out;
  out["schema"] = "syncprim-verify/1";
  out["groups"] = groups;
  detail::Json checks_json = detail::Json::array();
  for (const auto& c : checks)
    checks_json.push_back({{"check", c.name}, {"checked", c.checked}, {"violations", c.violations}});
  out["checks"] = std::move(checks_json);
  out["expected_divergences"] = expected_divergences;
  out["violation"] = violation ? detail::Json(*violation) : detail::Json(nullptr);
  out["ok"] = ok();
  return out.dump(indent);
}

std::uint64_t entry_hash(std::string_view name) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : name) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

namespace {

std::string hex64(std::uint64_t value) {
  char buffer[19];
  std::snprintf(buffer, sizeof buffer, "%016llx", static_cast<unsigned long long>(value));
  return buffer;
}

}  // namespace

SearchSummary search_strongly_sync_maximal(
    const SearchOptions& options, const std::function<void(const ExperimentRecord&)>& sink) {
  if (options.max_degree > 7) throw Error("search supports degrees <= 7");
  if (options.min_degree < 1 || options.min_degree > options.max_degree)
    throw Error("empty degree range");

  SearchSummary summary;
  const auto catalog = builtin_catalog(options.max_degree);
  for (std::size_t n = options.min_degree; n <= options.max_degree; ++n) {
    std::vector<CatalogEntry> entries;
    for (const auto& e : catalog)
      if (e.group.degree() == n) entries.push_back(e);
    SplitMix64 rng(options.seed + n);
    for (std::size_t i = 0; i < options.random_subgroups; ++i)
      entries.push_back({"random-" + std::to_string(n) + "-" + std::to_string(i),
                         GroupSpec(n, {random_permutation(rng, n), random_permutation(rng, n)}),
                         std::nullopt, std::nullopt});

    for (const auto& e : entries) {
      const std::uint64_t hash = entry_hash(e.name);
      if (options.completed.contains(hash)) {
        ++summary.skipped;
        continue;
      }
      const auto start = std::chrono::steady_clock::now();
      ClassifyOptions classify_options;
      classify_options.scan = options.scan;
      classify_options.conditions = false;
      ExperimentRecord record{e.name, hash, std::string(kVersion),
                              classify(e.group, classify_options, e.name)};
      const auto& r = record.report;
      const bool prim = r.primitive.value == TriState::True;
      record.primitive_not_strong = prim && r.strongly_sync_maximal.value == TriState::False;
      record.strong_not_four_transitive = r.strongly_sync_maximal.value == TriState::True &&
                                          r.four_transitive.value == TriState::False;
      record.millis =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
              .count();
      ++summary.records;
      summary.primitive_not_strong += record.primitive_not_strong;
      summary.strong_not_four_transitive += record.strong_not_four_transitive;
      if (r.strongly_sync_maximal.value == TriState::True && !prim && !summary.violation)
        summary.violation = e.name + ": strongly sync-maximal but imprimitive";
      sink(record);
    }
  }
  return summary;
}

std::string serialize_record(const ExperimentRecord& record, bool timings) {
  detail::Json out;
  out["entry"] = record.entry;
  out["entry_hash"] = hex64(record.entry_hash);
  out["version"] = record.version;
  out["observations"] = {{"primitive_not_strong", record.primitive_not_strong},
                         {"strong_not_four_transitive", record.strong_not_four_transitive}};
  out["report"] = detail::report_to_json(record.report, timings);
  if (timings) out["millis"] = record.millis;
  return out.dump();
}

std::set<std::uint64_t> completed_entries(std::string_view log) {
  std::set<std::uint64_t> out;
  std::istringstream lines{std::string(log)};
  std::string line;
  while (std::getline(lines, line)) {
    const auto json = detail::Json::parse(line, nullptr, false);
    if (json.is_discarded() || !json.contains("entry_hash") || !json["entry_hash"].is_string())
      continue;
    out.insert(std::stoull(json["entry_hash"].get<std::string>(), nullptr, 16));
  }
  return out;
}

}  // namespace syncprim
