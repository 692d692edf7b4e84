#include "cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "syncprim/automaton.hpp"
#include "syncprim/classify.hpp"
#include "syncprim/error.hpp"
#include "syncprim/group.hpp"
#include "syncprim/harness.hpp"

namespace syncprim::cli {

namespace {

using Json = nlohmann::ordered_json;

// Thrown for bad command-line values; maps to exit code 2.
struct UsageError : Error {
  using Error::Error;
};

struct Globals {
  std::size_t threads = 1;
  std::uint64_t seed = 1;
  bool timings = false;
  std::string out_path;
};

std::size_t parse_count(std::string_view text) {
  std::size_t value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size())
    throw UsageError("expected a number, got '" + std::string(text) + "'");
  return value;
}

std::pair<std::size_t, std::size_t> parse_degree_range(std::string_view text) {
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    const std::size_t n = parse_count(text);
    return {n, n};
  }
  return {parse_count(text.substr(0, dots)), parse_count(text.substr(dots + 2))};
}

// Writes `document` to --out when given, otherwise to `out`.
void emit(const Globals& globals, std::ostream& out, const std::string& document) {
  if (globals.out_path.empty()) {
    out << document << '\n';
    return;
  }
  std::ofstream file(globals.out_path, std::ios::trunc);
  if (!file) throw UsageError("cannot write '" + globals.out_path + "'");
  file << document << '\n';
}

ScanOptions scan_options(const Globals& globals) {
  ScanOptions scan;
  scan.threads = globals.threads;
  return scan;
}

// Errors from reading `path` are reported with the path in front.
template <typename Read>
auto load(const std::string& path, Read read) {
  try {
    return read(path);
  } catch (const Error& e) {
    throw Error(path + ": " + e.what());
  }
}

int run_classify(const Globals& globals, const std::string& path, const std::string& mode,
                 bool conditions, bool strongly, std::ostream& out) {
  const GroupSpec group = load(path, read_group_file);
  ClassifyOptions options;
  options.scan = scan_options(globals);
  options.mode = parse_quantifier_mode(mode);
  options.conditions = conditions;
  options.strongly = strongly;
  const ClassificationReport report =
      classify(group, options, std::filesystem::path(path).stem().string());
  emit(globals, out, serialize_report(report, globals.timings));
  return kOk;
}

int run_verify(const Globals& globals, std::size_t max_degree, const std::string& mode,
               bool census, std::ostream& out, std::ostream& err) {
  VerifyOptions options;
  options.max_degree = max_degree;
  options.mode = parse_verify_mode(mode);
  options.census = census;
  options.scan = scan_options(globals);
  const VerifySummary summary = verify_theorems(options);
  emit(globals, out, summary.to_json());
  if (summary.violation) {
    err << "violation: " << *summary.violation << '\n';
    return kVerificationFailed;
  }
  return kOk;
}

int run_search(const Globals& globals, const std::string& degrees, std::size_t random_subgroups,
               bool resume, std::ostream& out, std::ostream& err) {
  SearchOptions options;
  std::tie(options.min_degree, options.max_degree) = parse_degree_range(degrees);
  options.random_subgroups = random_subgroups;
  options.seed = globals.seed;
  options.scan = scan_options(globals);
  options.timings = globals.timings;

  std::ofstream log;
  if (!globals.out_path.empty()) {
    if (resume) {
      std::ifstream previous(globals.out_path);
      std::stringstream text;
      text << previous.rdbuf();
      options.completed = completed_entries(text.str());
    }
    log.open(globals.out_path, resume ? std::ios::app : std::ios::trunc);
    if (!log) throw UsageError("cannot write '" + globals.out_path + "'");
  } else if (resume) {
    throw UsageError("--resume needs --out <log>");
  }
  std::ostream& sink = log.is_open() ? static_cast<std::ostream&>(log) : out;

  const SearchSummary summary =
      search_strongly_sync_maximal(options, [&](const ExperimentRecord& record) {
        sink << serialize_record(record, globals.timings) << '\n' << std::flush;
      });
  err << "search: " << summary.records << " records, " << summary.skipped
      << " resumed, primitive_not_strong=" << summary.primitive_not_strong
      << ", strong_not_four_transitive=" << summary.strong_not_four_transitive << '\n';
  if (summary.violation) {
    err << "violation: " << *summary.violation << '\n';
    return kVerificationFailed;
  }
  return kOk;
}

Json optional_word(const std::optional<Word>& word) {
  return word ? Json(format_word(*word)) : Json(nullptr);
}

int run_syn_dfa(const Globals& globals, const std::string& path, std::ostream& out) {
  const SemiAutomaton automaton = load(path, read_automaton_file);
  const SubsetAutomaton subsets = build_subset_automaton(automaton);
  const DfaSummary dfa = minimal_syn_dfa(subsets);
  const std::optional<Word> reset = shortest_reset_word(automaton);

  Json doc;
  doc["degree"] = automaton.degree();
  doc["letters"] = automaton.letter_count();
  doc["reachable_subsets"] = subsets.states.size();
  doc["state_count"] = dfa.state_count;
  doc["max_state_count"] = max_syn_state_count(automaton.degree());
  doc["pairwise_state_count"] = subsets.states.size() <= kPairwiseStateCap
                                    ? Json(count_classes_pairwise(subsets))
                                    : Json(nullptr);
  doc["synchronizing"] = reset.has_value();
  doc["reset_word"] = optional_word(reset);
  doc["reset_length"] = reset ? Json(reset->size()) : Json(nullptr);
  emit(globals, out, doc.dump(2));
  return kOk;
}

int run_witness(const Globals& globals, const std::string& path, const std::string& s_text,
                const std::string& t_text, const std::string& kind, std::ostream& out) {
  const SemiAutomaton automaton = load(path, read_automaton_file);
  const PointSet s = parse_set(s_text, automaton.degree());
  const PointSet t = parse_set(t_text, automaton.degree());
  std::optional<Word> word;
  if (kind == "distinguish")
    word = distinguish_witness(automaton, s, t);
  else if (kind == "cardinality")
    word = cardinality_witness(automaton, s, t);
  else
    throw UsageError("unknown witness kind '" + kind + "'");

  Json doc;
  doc["kind"] = kind;
  doc["S"] = format_set(s);
  doc["T"] = format_set(t);
  doc["word"] = optional_word(word);
  doc["length"] = word ? Json(word->size()) : Json(nullptr);
  emit(globals, out, doc.dump(2));
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Primitive groups and synchronizing automata"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  Globals globals;
  app.add_option("--threads", globals.threads, "Worker threads for map scans")
      ->check(CLI::Range(1, 1024));
  app.add_option("--seed", globals.seed, "Seed for random sampling");
  app.add_flag("--timings", globals.timings, "Include wall-clock milliseconds in output");
  app.add_option("--out", globals.out_path, "Write the document (or campaign log) to a file");

  std::string path, s_text, t_text;
  std::string mode = "idempotents";
  bool no_conditions = false, no_strong = false;
  auto* classify_cmd = app.add_subcommand("classify", "Classify the group in a .grp file");
  classify_cmd->add_option("groupfile", path)->required();
  classify_cmd->add_option("--mode", mode, "idempotents | all")->capture_default_str();
  classify_cmd->add_flag("--no-conditions", no_conditions, "Skip conditions 2..6");
  classify_cmd->add_flag("--no-strong", no_strong, "Skip the n^n strong scan");

  std::size_t max_degree = 5;
  std::string verify_mode = "both";
  bool no_census = false;
  auto* verify_cmd = app.add_subcommand("verify", "Run the equivalence battery");
  verify_cmd->add_option("--max-degree", max_degree)->capture_default_str();
  verify_cmd->add_option("--mode", verify_mode, "idempotents | all | both")->capture_default_str();
  verify_cmd->add_flag("--no-census", no_census, "Skip the subgroup census of S_3 and S_4");

  std::string degrees = "4..5";
  std::size_t random_subgroups = 0;
  bool resume = false;
  auto* search_cmd = app.add_subcommand("search", "Classify catalog groups for strong sync-maximality");
  search_cmd->add_option("--degrees", degrees, "A..B or a single degree")->capture_default_str();
  search_cmd->add_option("--random-subgroups", random_subgroups, "Random 2-generated groups per degree");
  search_cmd->add_flag("--resume", resume, "Skip entries already in the --out log");

  auto* syn_cmd = app.add_subcommand("syn-dfa", "Minimal DFA size of Syn and a shortest reset word");
  syn_cmd->add_option("automatonfile", path)->required();

  std::string kind = "distinguish";
  auto* witness_cmd = app.add_subcommand("witness", "Shortest word telling two subsets apart");
  witness_cmd->add_option("automatonfile", path)->required();
  witness_cmd->add_option("S", s_text)->required();
  witness_cmd->add_option("T", t_text)->required();
  witness_cmd->add_option("--kind", kind, "distinguish | cardinality")->capture_default_str();

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*classify_cmd)
      return run_classify(globals, path, mode, !no_conditions, !no_strong, out);
    if (*verify_cmd) return run_verify(globals, max_degree, verify_mode, !no_census, out, err);
    if (*search_cmd) return run_search(globals, degrees, random_subgroups, resume, out, err);
    if (*syn_cmd) return run_syn_dfa(globals, path, out);
    if (*witness_cmd) return run_witness(globals, path, s_text, t_text, kind, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace syncprim::cli
