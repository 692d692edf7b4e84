#include <gtest/gtest.h>

#include <algorithm>

#include "oracles.hpp"
#include "syncprim/error.hpp"
#include "syncprim/harness.hpp"

namespace {

using namespace syncprim;

const CatalogEntry& find(const std::vector<CatalogEntry>& entries, std::string_view name) {
  auto it = std::find_if(entries.begin(), entries.end(),
                         [&](const CatalogEntry& e) { return e.name == name; });
  if (it == entries.end()) throw std::runtime_error("missing entry " + std::string(name));
  return *it;
}

TEST(Catalog, ContainsRequiredFamilies) {
  const auto catalog = builtin_catalog(6);
  const auto& appendix = find(catalog, "appendix-4");
  EXPECT_EQ(appendix.group.generators().front(), parse_permutation("(0 1 2)(3)", 4));
  EXPECT_EQ(appendix.primitive, false);
  EXPECT_EQ(find(catalog, "C5").primitive, true);
  EXPECT_EQ(find(catalog, "trivial-3").primitive, false);
  for (const char* name : {"klein-4", "S2wrS2-4", "S2wrS3-6", "S3wrS2-6", "D6", "A6", "S6"})
    EXPECT_NO_THROW(find(catalog, name)) << name;
  EXPECT_EQ(builtin_catalog(6).size(), catalog.size());
  for (const auto& e : builtin_catalog(3)) EXPECT_LE(e.group.degree(), 3u);
}

TEST(Catalog, ExpectedFlagsMatchOracles) {
  for (const auto& e : builtin_catalog(7)) {
    const std::size_t n = e.group.degree();
    const auto gens = oracle::to_maps(e.group.generators());
    for (const auto& g : e.group.generators()) ASSERT_TRUE(g.is_permutation());
    if (e.transitive) EXPECT_EQ(*e.transitive, oracle::transitive(n, gens)) << e.name;
    if (e.primitive && n <= 7) EXPECT_EQ(*e.primitive, oracle::primitive(n, gens)) << e.name;
  }
}

TEST(Catalog, GroupOrders) {
  const auto catalog = builtin_catalog(7);
  const std::vector<std::pair<const char*, std::size_t>> orders = {
      {"A4", 12},     {"A5", 60},      {"A6", 360},  {"A7", 2520},   {"S6", 720},
      {"D6", 12},     {"AGL1-5", 20},  {"PSL2-5", 60}, {"PGL2-5", 120}, {"F21-7", 21},
      {"AGL1-7", 42}, {"PSL3-2", 168}, {"S2wrS3-6", 48}, {"S3wrS2-6", 72}, {"klein-4", 4},
      {"S2wrS2-4", 8}};
  for (const auto& [name, order] : orders)
    EXPECT_EQ(enumerate_elements(find(catalog, name).group).size(), order) << name;
}

TEST(Census, SubgroupCounts) {
  EXPECT_EQ(subgroup_census(1).size(), 1u);
  EXPECT_EQ(subgroup_census(2).size(), 2u);
  EXPECT_EQ(subgroup_census(3).size(), 6u);
  EXPECT_EQ(subgroup_census(4).size(), 30u);
  EXPECT_EQ(subgroup_census(5).size(), 156u);
  EXPECT_THROW(subgroup_census(6), Error);
  const auto s4 = subgroup_census(4);
  EXPECT_EQ(s4.front().name, "S4-sub-00");
  EXPECT_EQ(enumerate_elements(s4.front().group).size(), 1u);
  EXPECT_EQ(enumerate_elements(s4.back().group).size(), 24u);
}

TEST(Random, SplitMixReferenceStream) {
  // reference values of splitmix64 seeded with 0
  SplitMix64 rng(0);
  EXPECT_EQ(rng.next(), 0xe220a8397b1dcdafULL);
  EXPECT_EQ(rng.next(), 0x6e789e6aa1b965f4ULL);
  EXPECT_EQ(rng.next(), 0x06c45d188009454fULL);
  SplitMix64 bounded(7);
  for (int i = 0; i < 1000; ++i) ASSERT_LT(bounded.below(13), 13u);
  EXPECT_THROW(bounded.below(0), Error);
}

TEST(Random, AutomataAndPermutationsAreSeeded) {
  SplitMix64 a(99), b(99);
  for (int i = 0; i < 50; ++i) {
    const auto x = random_automaton(a, 1, 8, 2, 4), y = random_automaton(b, 1, 8, 2, 4);
    ASSERT_EQ(x.letters(), y.letters());
    ASSERT_TRUE(x.degree() >= 1 && x.degree() <= 8);
    ASSERT_TRUE(x.letter_count() >= 2 && x.letter_count() <= 4);
    ASSERT_TRUE(random_permutation(a, 6).is_permutation());
    random_permutation(b, 6);
  }
}

TEST(Verify, DegreeFiveHoldsInAllModes) {
  for (auto mode : {VerifyMode::IdempotentsOnly, VerifyMode::AllMaps, VerifyMode::Both}) {
    VerifyOptions options;
    options.max_degree = 5;
    options.mode = mode;
    const auto summary = verify_theorems(options);
    EXPECT_TRUE(summary.ok()) << summary.violation.value_or("");
    EXPECT_GT(summary.groups, 36u);
    for (const auto& c : summary.checks) EXPECT_EQ(c.violations, 0u) << c.name;
  }
}

TEST(Verify, AppendixDivergenceIsExpected) {
  VerifyOptions options;
  options.max_degree = 4;
  const auto summary = verify_theorems(options);
  ASSERT_TRUE(summary.ok());
  const bool listed =
      std::any_of(summary.expected_divergences.begin(), summary.expected_divergences.end(),
                  [](const std::string& d) { return d.rfind("appendix-4: condition 6=true", 0) == 0; });
  EXPECT_TRUE(listed);
}

TEST(Verify, EmptyCatalogPassesTrivially) {
  const auto summary = verify_theorems(std::vector<CatalogEntry>{}, VerifyOptions{});
  EXPECT_TRUE(summary.ok());
  EXPECT_TRUE(summary.checks.empty());
  EXPECT_EQ(summary.groups, 0u);
}

TEST(Verify, WrongExpectationIsReportedAsViolation) {
  std::vector<CatalogEntry> entries{{"mislabelled", GroupSpec(4, {parse_permutation("(0 1 2 3)", 4)}),
                                     true, true}};
  const auto summary = verify_theorems(entries, VerifyOptions{});
  ASSERT_FALSE(summary.ok());
  EXPECT_NE(summary.violation->find("mislabelled"), std::string::npos);
  EXPECT_NE(summary.violation->find("blocks={{0,2},{1,3}}"), std::string::npos);
}

TEST(Verify, RejectsLargeDegrees) {
  VerifyOptions options;
  options.max_degree = 7;
  EXPECT_THROW(verify_theorems(options), Error);
}

TEST(Verify, ModeNames) {
  EXPECT_EQ(parse_verify_mode("idempotents"), VerifyMode::IdempotentsOnly);
  EXPECT_EQ(parse_verify_mode("all"), VerifyMode::AllMaps);
  EXPECT_EQ(parse_verify_mode("both"), VerifyMode::Both);
  EXPECT_THROW(parse_verify_mode("none"), ParseError);
  EXPECT_EQ(to_string(VerifyMode::Both), "both");
}

TEST(Search, RecordsObservationsAndResumes) {
  SearchOptions options;
  options.min_degree = 4;
  options.max_degree = 5;
  options.random_subgroups = 2;
  std::vector<std::string> log;
  std::vector<ExperimentRecord> records;
  const auto summary = search_strongly_sync_maximal(options, [&](const ExperimentRecord& r) {
    records.push_back(r);
    log.push_back(serialize_record(r, false));
  });
  EXPECT_FALSE(summary.violation);
  EXPECT_EQ(summary.records, records.size());
  for (const auto& r : records) {
    EXPECT_EQ(r.entry_hash, entry_hash(r.entry));
    EXPECT_EQ(r.version, kVersion);
    if (r.report.strongly_sync_maximal.value == TriState::True)
      EXPECT_EQ(r.report.primitive.value, TriState::True) << r.entry;
    if (r.report.group.degree() == 5 && r.report.strongly_sync_maximal.value == TriState::True)
      EXPECT_EQ(r.report.strongly_sync_maximal.visited, 3125u);
  }

  std::string text;
  for (std::size_t i = 0; i < 3; ++i) text += log[i] + "\n";
  text += "not json\n";
  options.completed = completed_entries(text);
  EXPECT_EQ(options.completed.size(), 3u);
  std::vector<std::string> resumed;
  const auto again = search_strongly_sync_maximal(
      options, [&](const ExperimentRecord& r) { resumed.push_back(serialize_record(r, false)); });
  EXPECT_EQ(again.skipped, 3u);
  EXPECT_EQ(resumed, std::vector<std::string>(log.begin() + 3, log.end()));
}

TEST(Search, RejectsDegreeAboveSeven) {
  SearchOptions options;
  options.max_degree = 8;
  EXPECT_THROW(search_strongly_sync_maximal(options, [](const ExperimentRecord&) {}), Error);
}

TEST(Search, EntryHashIsFnv1a) {
  EXPECT_EQ(entry_hash(""), 0xcbf29ce484222325ULL);
  EXPECT_EQ(entry_hash("a"), 0xaf63dc4c8601ec8cULL);
}

}  // namespace
