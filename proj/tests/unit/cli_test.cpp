#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"

namespace {

using Json = nlohmann::json;
namespace fs = std::filesystem;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "syncprim");
  std::ostringstream out, err;
  const int code = syncprim::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(SYNCPRIM_DATA_DIR) + "/" + name; }

fs::path scratch(const char* name) {
  const auto dir = fs::temp_directory_path() / "syncprim_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

TEST(Cli, ClassifyC5) {
  const auto r = run({"classify", data("c5.grp")});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = Json::parse(r.out);
  EXPECT_EQ(doc["schema"], "syncprim-report/1");
  EXPECT_EQ(doc["name"], "c5");
  EXPECT_EQ(doc["predicates"]["primitive"]["value"], true);
  EXPECT_EQ(doc["predicates"]["sync_maximal"]["value"], true);
}

TEST(Cli, ClassifyWritesOutFile) {
  const auto path = scratch("c4.json");
  const auto r = run({"classify", data("c4.grp"), "--out", path.string(), "--mode", "all"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  const auto doc = Json::parse(slurp(path));
  EXPECT_EQ(doc["mode"], "all_rank_n_minus_1");
  EXPECT_EQ(doc["predicates"]["primitive"]["witness"]["blocks"], Json::parse("[[0,2],[1,3]]"));
}

TEST(Cli, ThreadsDoNotChangeReports) {
  const auto one = run({"classify", data("s4.grp"), "--threads", "1"});
  const auto eight = run({"classify", data("s4.grp"), "--threads", "8"});
  ASSERT_EQ(one.code, 0);
  EXPECT_EQ(one.out, eight.out);
}

TEST(Cli, VerifyDegreeFive) {
  const auto r = run({"verify", "--max-degree", "5"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(Json::parse(r.out)["ok"], true);
}

TEST(Cli, VerifyDegreeFourReportsAppendixDivergence) {
  const auto r = run({"verify", "--max-degree", "4", "--mode", "idempotents"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = Json::parse(r.out);
  bool found = false;
  for (const auto& d : doc["expected_divergences"])
    found = found || d.get<std::string>().rfind("appendix-4: condition 6=true", 0) == 0;
  EXPECT_TRUE(found);
}

TEST(Cli, SynDfaCerny4) {
  const auto r = run({"syn-dfa", data("cerny4.aut")});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = Json::parse(r.out);
  EXPECT_EQ(doc["state_count"], 12);
  EXPECT_EQ(doc["pairwise_state_count"], 12);
  EXPECT_EQ(doc["reset_length"], 9);
}

TEST(Cli, Witness) {
  const auto r = run({"witness", data("cerny4.aut"), "{0,1}", "{2,3}"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = Json::parse(r.out);
  EXPECT_TRUE(doc["word"].is_string());
  const auto c = run({"witness", data("cerny4.aut"), "0 1", "0 1 2", "--kind", "cardinality"});
  ASSERT_EQ(c.code, 0) << c.err;
  EXPECT_EQ(Json::parse(c.out)["length"], 0);
}

TEST(Cli, SearchLogResumes) {
  const auto log = scratch("search.jsonl");
  fs::remove(log);
  auto first = run({"search", "--degrees", "4", "--out", log.string()});
  ASSERT_EQ(first.code, 0) << first.err;
  const auto full = slurp(log);
  EXPECT_EQ(std::count(full.begin(), full.end(), '\n'), 8);

  // keep two records and resume the rest
  std::istringstream lines(full);
  std::string line, head;
  for (int i = 0; i < 2 && std::getline(lines, line); ++i) head += line + "\n";
  std::ofstream(log) << head;
  auto second = run({"search", "--degrees", "4..4", "--out", log.string(), "--resume"});
  ASSERT_EQ(second.code, 0) << second.err;
  EXPECT_NE(second.err.find("2 resumed"), std::string::npos);
  EXPECT_EQ(slurp(log), full);
}

TEST(Cli, InputErrorsExitTwoWithLineNumbers) {
  const auto bad = run({"classify", data("bad_generator.grp")});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("line 3"), std::string::npos);
  EXPECT_EQ(run({"classify", data("missing.grp")}).code, 2);
  EXPECT_EQ(run({"witness", data("cerny4.aut"), "{0,9}", "{1,2}"}).code, 2);
  EXPECT_EQ(run({"witness", data("cerny4.aut"), "{0,1}", "{0,1}"}).code, 2);
  EXPECT_EQ(run({"verify", "--max-degree", "7"}).code, 2);
  EXPECT_EQ(run({"search", "--degrees", "8"}).code, 2);
  EXPECT_EQ(run({"search", "--resume"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

}  // namespace
