#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "syncprim/group.hpp"
#include "syncprim/perm.hpp"
#include "syncprim/point_set.hpp"

namespace syncprim {

/// Letter indices, read left to right: the first letter is applied first.
using Word = std::vector<std::size_t>;

/// Semi-automaton on states [n]; letter i acts as letters()[i].
class SemiAutomaton {
 public:
  /// Throws Error on an empty letter list or a letter of another degree.
  SemiAutomaton(std::size_t degree, std::vector<Transformation> letters);

  std::size_t degree() const noexcept { return degree_; }
  std::size_t letter_count() const noexcept { return letters_.size(); }
  const std::vector<Transformation>& letters() const noexcept { return letters_; }
  const Transformation& letter(std::size_t i) const { return letters_.at(i); }

 private:
  std::size_t degree_;
  std::vector<Transformation> letters_;
};

PointSet apply_word(const SemiAutomaton& automaton, PointSet states, const Word& word);

/// The map delta_w, i.e. x_m o ... o x_1 for w = x_1 ... x_m.
Transformation word_map(const SemiAutomaton& automaton, const Word& word);

/// Space-separated letter indices; the empty word is "".
std::string format_word(const Word& word);

/// Letters: the group generators in order, then f.
SemiAutomaton build_group_automaton(const GroupSpec& group, const Transformation& f);

/// For f of rank n-1 with missing image point a and collapsed pair {p,q},
/// finds g in G with g(a) in {p,q} and returns idempotent_power(g o f), an
/// idempotent of rank n-1 lying in <G u {f}>. Empty when no such g exists.
std::optional<Transformation> idempotent_reduction(const GroupSpec& group, const Transformation& f);

/// Cerny automaton C_n: letter 0 is the rotation i -> i+1 mod n, letter 1
/// sends 0 to 1 and fixes everything else.
SemiAutomaton cerny_automaton(std::size_t n);

/// Pair criterion: every pair of states can be merged. O(n^2 |letters|).
bool is_synchronizing_pairs(const SemiAutomaton& automaton);

/// Shortest reset word, lexicographically least among the shortest.
/// Throws DegreeCapExceeded for n > kSubsetDegreeCap.
std::optional<Word> shortest_reset_word(const SemiAutomaton& automaton);

/// Reachable part of the power automaton, breadth-first from the full set
/// with letters tried in order. State 0 is the full set.
struct SubsetAutomaton {
  std::size_t degree = 0;
  std::size_t letter_count = 0;
  std::vector<PointSet> states;
  std::vector<std::uint32_t> transitions;  // row-major, states.size() x letter_count

  std::uint32_t next(std::size_t state, std::size_t letter) const {
    return transitions[state * letter_count + letter];
  }
  bool accepting(std::size_t state) const { return cardinality(states[state]) == 1; }
  std::size_t accepting_count() const;
};

SubsetAutomaton build_subset_automaton(const SemiAutomaton& automaton);

bool is_completely_reachable(const SemiAutomaton& automaton);

struct DfaSummary {
  std::size_t state_count = 0;
  std::size_t accepting_count = 0;
  /// Class of each SubsetAutomaton state, numbered by first appearance.
  std::vector<std::uint32_t> class_of;
};

/// 2^n - n, the largest possible state count of the minimal DFA for Syn(A).
std::uint64_t max_syn_state_count(std::size_t n);

/// Minimal DFA of Syn(A) by Moore refinement over the reachable subset
/// automaton, singletons merged into one accepting class. An automaton with
/// Syn(A) empty yields the single dead class.
DfaSummary minimal_syn_dfa(const SemiAutomaton& automaton);
DfaSummary minimal_syn_dfa(const SubsetAutomaton& subsets);

/// Independent route to the same count: table-filling over all state pairs
/// (backward search in the product automaton from pairs that differ in
/// acceptance), then counting indistinguishability classes. Throws Error for
/// more than kPairwiseStateCap states.
inline constexpr std::size_t kPairwiseStateCap = 4096;
std::size_t count_classes_pairwise(const SubsetAutomaton& subsets);

struct DistinguishVerdict {
  bool all_distinguishable = true;
  /// First indistinguishable pair; see each function for the order.
  std::optional<std::pair<PointSet, PointSet>> witness;
};

/// Collapse DFA on the C(n,2) 2-subsets plus a sink for "became a singleton".
/// Witness order: lexicographic on pairs of 2-subsets, 2-subsets in
/// lexicographic order of their members. No 2^n construction.
DistinguishVerdict all_2subsets_distinguishable(const SemiAutomaton& automaton);

/// Same refinement, only pairs of disjoint 2-subsets must be separated.
DistinguishVerdict disjoint_2subsets_distinguishable(const SemiAutomaton& automaton);

/// Collapse DFA on all subsets of size >= 2 plus the sink. Witness order:
/// pairs (S,T) with S < T as bit-set values, lexicographic.
DistinguishVerdict all_nonsingleton_distinguishable(const SemiAutomaton& automaton);

/// Two subsets of size >= 2 are separated when some word maps them to images
/// of different cardinality. Refinement of all non-empty subsets labelled by
/// cardinality; witness order as all_nonsingleton_distinguishable.
DistinguishVerdict all_nonsingleton_cardinality_distinguishable(const SemiAutomaton& automaton);

/// Shortest word (lexicographically least among shortest) mapping exactly one
/// of S, T to a singleton. Throws Error unless S != T, |S| >= 2, |T| >= 2 and
/// both lie inside [n].
std::optional<Word> distinguish_witness(const SemiAutomaton& automaton, PointSet s, PointSet t);

/// Shortest word with |delta(S,w)| != |delta(T,w)|. Same preconditions.
std::optional<Word> cardinality_witness(const SemiAutomaton& automaton, PointSet s, PointSet t);

/// Text format: "degree n" then one letter per line (image list).
SemiAutomaton parse_automaton(std::string_view text);
SemiAutomaton read_automaton_file(const std::string& path);
std::string format_automaton(const SemiAutomaton& automaton);

}  // namespace syncprim
