#include "syncprim/automaton.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "refine.hpp"
#include "syncprim/error.hpp"
#include "text_input.hpp"

namespace syncprim {

SemiAutomaton::SemiAutomaton(std::size_t degree, std::vector<Transformation> letters)
    : degree_(degree), letters_(std::move(letters)) {
  if (degree_ == 0) throw Error("automaton of degree 0");
  if (letters_.empty()) throw Error("automaton needs at least one letter");
  for (const auto& x : letters_)
    if (x.degree() != degree_) throw Error("degree mismatch");
}

PointSet apply_word(const SemiAutomaton& automaton, PointSet states, const Word& word) {
  for (std::size_t x : word) states = automaton.letter(x).apply(states);
  return states;
}

Transformation word_map(const SemiAutomaton& automaton, const Word& word) {
  Transformation map = Transformation::identity(automaton.degree());
  for (std::size_t x : word) map = compose(automaton.letter(x), map);
  return map;
}

std::string format_word(const Word& word) {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(word[i]);
  }
  return out;
}

SemiAutomaton build_group_automaton(const GroupSpec& group, const Transformation& f) {
  if (f.degree() != group.degree()) throw Error("degree mismatch");
  std::vector<Transformation> letters = group.generators();
  letters.push_back(f);
  return SemiAutomaton(group.degree(), std::move(letters));
}

std::optional<Transformation> idempotent_reduction(const GroupSpec& group, const Transformation& f) {
  const std::size_t n = group.degree();
  if (f.degree() != n) throw Error("degree mismatch");
  if (f.rank() + 1 != n) throw Error("idempotent reduction needs a map of rank n-1");

  const PointSet missing = full_set(n) & ~f.image_set();
  const Point a = static_cast<Point>(std::countr_zero(missing));
  PointSet collapsed = 0;
  for (Point x = 0; x < n && collapsed == 0; ++x)
    for (Point y = x + 1; y < n; ++y)
      if (f(x) == f(y)) {
        collapsed = singleton(x) | singleton(y);
        break;
      }

  // orbit of a with a transversal element for every reached point
  std::vector<std::optional<Transformation>> reach(n);
  reach[a] = Transformation::identity(n);
  std::deque<Point> queue{a};
  while (!queue.empty()) {
    const Point x = queue.front();
    queue.pop_front();
    if (contains(collapsed, x)) return idempotent_power(compose(*reach[x], f));
    for (const auto& g : group.generators()) {
      const Point y = g(x);
      if (!reach[y]) {
        reach[y] = compose(g, *reach[x]);
        queue.push_back(y);
      }
    }
  }
  return std::nullopt;
}

SemiAutomaton cerny_automaton(std::size_t n) {
  std::vector<Point> rotation(n);
  std::vector<Point> merge(n);
  for (std::size_t i = 0; i < n; ++i) {
    rotation[i] = static_cast<Point>((i + 1) % n);
    merge[i] = static_cast<Point>(i);
  }
  if (n > 1) merge[0] = 1;
  return SemiAutomaton(n, {Transformation(std::move(rotation)), Transformation(std::move(merge))});
}

namespace {

// Index of the 2-subset {p < q} among all pairs, ordered by q then p.
std::size_t pair_index(Point p, Point q) {
  if (p > q) std::swap(p, q);
  return std::size_t{q} * (q - 1) / 2 + p;
}

void require_subset_cap(std::size_t n) {
  if (n > kSubsetDegreeCap) throw DegreeCapExceeded(n, kSubsetDegreeCap);
}

// Dense index for small degrees, hashed beyond.
class SubsetIndex {
 public:
  static constexpr std::uint32_t kAbsent = UINT32_MAX;

  explicit SubsetIndex(std::size_t n) {
    if (n <= 20) dense_.assign(std::size_t{1} << n, kAbsent);
  }

  std::uint32_t find(PointSet s) const {
    if (!dense_.empty()) return dense_[s];
    auto it = sparse_.find(s);
    return it == sparse_.end() ? kAbsent : it->second;
  }

  void insert(PointSet s, std::uint32_t index) {
    if (!dense_.empty())
      dense_[s] = index;
    else
      sparse_.emplace(s, index);
  }

 private:
  std::vector<std::uint32_t> dense_;
  std::unordered_map<PointSet, std::uint32_t> sparse_;
};

Word trace_back(const std::vector<std::uint32_t>& parent, const std::vector<std::uint32_t>& via,
                std::uint32_t node) {
  Word word;
  while (parent[node] != node) {
    word.push_back(via[node]);
    node = parent[node];
  }
  std::reverse(word.begin(), word.end());
  return word;
}

}  // namespace

bool is_synchronizing_pairs(const SemiAutomaton& automaton) {
  const std::size_t n = automaton.degree();
  if (n == 1) return true;
  const std::size_t pairs = n * (n - 1) / 2;
  const std::size_t k = automaton.letter_count();

  // predecessors in compressed form: pair -> list of pairs reaching it
  std::vector<std::uint32_t> offset(pairs + 1, 0);
  std::vector<bool> good(pairs, false);
  std::vector<std::uint32_t> frontier;
  for (Point q = 1; q < n; ++q)
    for (Point p = 0; p < q; ++p)
      for (std::size_t a = 0; a < k; ++a) {
        const Point x = automaton.letter(a)(p), y = automaton.letter(a)(q);
        if (x != y) ++offset[pair_index(x, y) + 1];
      }
  for (std::size_t i = 0; i < pairs; ++i) offset[i + 1] += offset[i];
  std::vector<std::uint32_t> preds(offset.back());
  std::vector<std::uint32_t> fill(offset.begin(), offset.end() - 1);
  for (Point q = 1; q < n; ++q)
    for (Point p = 0; p < q; ++p) {
      const auto self = static_cast<std::uint32_t>(pair_index(p, q));
      for (std::size_t a = 0; a < k; ++a) {
        const Point x = automaton.letter(a)(p), y = automaton.letter(a)(q);
        if (x == y) {
          if (!good[self]) {
            good[self] = true;
            frontier.push_back(self);
          }
        } else {
          preds[fill[pair_index(x, y)]++] = self;
        }
      }
    }

  std::size_t merged = frontier.size();
  while (!frontier.empty()) {
    const std::uint32_t pair = frontier.back();
    frontier.pop_back();
    for (std::uint32_t i = offset[pair]; i < offset[pair + 1]; ++i) {
      const std::uint32_t pred = preds[i];
      if (!good[pred]) {
        good[pred] = true;
        ++merged;
        frontier.push_back(pred);
      }
    }
  }
  return merged == pairs;
}

std::optional<Word> shortest_reset_word(const SemiAutomaton& automaton) {
  const std::size_t n = automaton.degree();
  require_subset_cap(n);
  if (n == 1) return Word{};

  SubsetIndex index(n);
  std::vector<PointSet> states{full_set(n)};
  std::vector<std::uint32_t> parent{0};
  std::vector<std::uint32_t> via{0};
  index.insert(full_set(n), 0);
  for (std::uint32_t current = 0; current < states.size(); ++current) {
    for (std::size_t a = 0; a < automaton.letter_count(); ++a) {
      const PointSet image = automaton.letter(a).apply(states[current]);
      if (index.find(image) != SubsetIndex::kAbsent) continue;
      const auto id = static_cast<std::uint32_t>(states.size());
      index.insert(image, id);
      states.push_back(image);
      parent.push_back(current);
      via.push_back(static_cast<std::uint32_t>(a));
      if (cardinality(image) == 1) return trace_back(parent, via, id);
    }
  }
  return std::nullopt;
}

std::size_t SubsetAutomaton::accepting_count() const {
  return static_cast<std::size_t>(
      std::count_if(states.begin(), states.end(), [](PointSet s) { return cardinality(s) == 1; }));
}

SubsetAutomaton build_subset_automaton(const SemiAutomaton& automaton) {
  const std::size_t n = automaton.degree();
  require_subset_cap(n);
  const std::size_t k = automaton.letter_count();

  SubsetAutomaton out;
  out.degree = n;
  out.letter_count = k;
  out.states.push_back(full_set(n));
  SubsetIndex index(n);
  index.insert(full_set(n), 0);
  for (std::size_t current = 0; current < out.states.size(); ++current) {
    for (std::size_t a = 0; a < k; ++a) {
      const PointSet image = automaton.letter(a).apply(out.states[current]);
      std::uint32_t id = index.find(image);
      if (id == SubsetIndex::kAbsent) {
        id = static_cast<std::uint32_t>(out.states.size());
        index.insert(image, id);
        out.states.push_back(image);
      }
      out.transitions.push_back(id);
    }
  }
  return out;
}

bool is_completely_reachable(const SemiAutomaton& automaton) {
  return build_subset_automaton(automaton).states.size() == full_set(automaton.degree());
}

std::uint64_t max_syn_state_count(std::size_t n) {
  return (std::uint64_t{1} << n) - n;
}

DfaSummary minimal_syn_dfa(const SubsetAutomaton& subsets) {
  std::vector<std::uint32_t> labels(subsets.states.size());
  for (std::size_t s = 0; s < labels.size(); ++s) labels[s] = subsets.accepting(s) ? 1 : 0;
  DfaSummary summary;
  summary.state_count = detail::moore_refine(subsets.letter_count, subsets.transitions, labels);
  summary.accepting_count = subsets.accepting_count() > 0 ? 1 : 0;
  summary.class_of = std::move(labels);
  return summary;
}

DfaSummary minimal_syn_dfa(const SemiAutomaton& automaton) {
  return minimal_syn_dfa(build_subset_automaton(automaton));
}

std::size_t count_classes_pairwise(const SubsetAutomaton& subsets) {
  const std::size_t states = subsets.states.size();
  if (states > kPairwiseStateCap)
    throw Error("pairwise oracle limited to " + std::to_string(kPairwiseStateCap) + " states");
  if (states <= 1) return states;
  const std::size_t k = subsets.letter_count;
  const std::size_t pairs = states * (states - 1) / 2;
  auto index = [](std::size_t i, std::size_t j) {
    if (i > j) std::swap(i, j);
    return j * (j - 1) / 2 + i;
  };

  std::vector<std::uint32_t> offset(pairs + 1, 0);
  for (std::size_t j = 1; j < states; ++j)
    for (std::size_t i = 0; i < j; ++i)
      for (std::size_t a = 0; a < k; ++a) {
        const std::size_t p = subsets.next(i, a), q = subsets.next(j, a);
        if (p != q) ++offset[index(p, q) + 1];
      }
  for (std::size_t i = 0; i < pairs; ++i) offset[i + 1] += offset[i];
  std::vector<std::uint32_t> preds(offset.back());
  std::vector<std::uint32_t> fill(offset.begin(), offset.end() - 1);
  std::vector<bool> distinct(pairs, false);
  std::vector<std::uint32_t> frontier;
  for (std::size_t j = 1; j < states; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      const auto self = static_cast<std::uint32_t>(index(i, j));
      if (subsets.accepting(i) != subsets.accepting(j)) {
        distinct[self] = true;
        frontier.push_back(self);
      }
      for (std::size_t a = 0; a < k; ++a) {
        const std::size_t p = subsets.next(i, a), q = subsets.next(j, a);
        if (p != q) preds[fill[index(p, q)]++] = self;
      }
    }
  while (!frontier.empty()) {
    const std::uint32_t pair = frontier.back();
    frontier.pop_back();
    for (std::uint32_t i = offset[pair]; i < offset[pair + 1]; ++i)
      if (!distinct[preds[i]]) {
        distinct[preds[i]] = true;
        frontier.push_back(preds[i]);
      }
  }

  // a state opens a new class iff it is distinguishable from every earlier one
  std::size_t classes = 0;
  for (std::size_t j = 0; j < states; ++j) {
    bool fresh = true;
    for (std::size_t i = 0; i < j && fresh; ++i)
      if (!distinct[index(i, j)]) fresh = false;
    if (fresh) ++classes;
  }
  return classes;
}

namespace {

// A collapse DFA over an explicit state list. The final state is the sink.
struct CollapseDfa {
  std::vector<PointSet> states;
  std::vector<std::uint32_t> transitions;
  std::vector<std::uint32_t> labels;
};

DistinguishVerdict first_shared_class(const std::vector<PointSet>& states,
                                      const std::vector<std::uint32_t>& labels, std::size_t count,
                                      bool disjoint_only) {
  DistinguishVerdict verdict;
  if (!disjoint_only) {
    // the least pair (i, j) has the least i owning a later class mate, and j
    // is that class's second member
    std::vector<std::size_t> first(labels.size(), SIZE_MAX);
    std::vector<std::size_t> second(labels.size(), SIZE_MAX);
    for (std::size_t i = 0; i < count; ++i) {
      const std::uint32_t c = labels[i];
      if (first[c] == SIZE_MAX)
        first[c] = i;
      else if (second[c] == SIZE_MAX)
        second[c] = i;
    }
    std::size_t best = SIZE_MAX;
    for (std::size_t c = 0; c < labels.size(); ++c)
      if (second[c] != SIZE_MAX && (best == SIZE_MAX || first[c] < first[best])) best = c;
    if (best != SIZE_MAX) verdict.witness = std::make_pair(states[first[best]], states[second[best]]);
  } else {
    for (std::size_t i = 0; i < count && !verdict.witness; ++i)
      for (std::size_t j = i + 1; j < count; ++j)
        if (labels[i] == labels[j] && (states[i] & states[j]) == 0) {
          verdict.witness = std::make_pair(states[i], states[j]);
          break;
        }
  }
  verdict.all_distinguishable = !verdict.witness;
  return verdict;
}

CollapseDfa two_subset_collapse(const SemiAutomaton& automaton) {
  const std::size_t n = automaton.degree();
  const std::size_t k = automaton.letter_count();
  CollapseDfa dfa;
  dfa.states = k_subsets(n, 2);
  const auto sink = static_cast<std::uint32_t>(dfa.states.size());
  std::vector<std::uint32_t> slot(n * n, 0);
  for (std::uint32_t i = 0; i < dfa.states.size(); ++i) {
    const auto pts = members(dfa.states[i]);
    slot[pts[0] * n + pts[1]] = slot[pts[1] * n + pts[0]] = i;
  }
  for (PointSet s : dfa.states) {
    const auto pts = members(s);
    for (std::size_t a = 0; a < k; ++a) {
      const Point x = automaton.letter(a)(pts[0]), y = automaton.letter(a)(pts[1]);
      dfa.transitions.push_back(x == y ? sink : slot[x * n + y]);
    }
  }
  for (std::size_t a = 0; a < k; ++a) dfa.transitions.push_back(sink);
  dfa.labels.assign(dfa.states.size() + 1, 0);
  dfa.labels.back() = 1;
  return dfa;
}

// All subsets with at least two points, in increasing bit-set order.
std::vector<PointSet> nonsingleton_subsets(std::size_t n) {
  std::vector<PointSet> out;
  out.reserve((std::size_t{1} << n) - n - 1);
  for (PointSet s = 1; s <= full_set(n); ++s)
    if (cardinality(s) >= 2) out.push_back(s);
  return out;
}

}  // namespace

DistinguishVerdict all_2subsets_distinguishable(const SemiAutomaton& automaton) {
  if (automaton.degree() < 3) return {};
  CollapseDfa dfa = two_subset_collapse(automaton);
  detail::moore_refine(automaton.letter_count(), dfa.transitions, dfa.labels);
  return first_shared_class(dfa.states, dfa.labels, dfa.states.size(), false);
}

DistinguishVerdict disjoint_2subsets_distinguishable(const SemiAutomaton& automaton) {
  if (automaton.degree() < 4) return {};
  CollapseDfa dfa = two_subset_collapse(automaton);
  detail::moore_refine(automaton.letter_count(), dfa.transitions, dfa.labels);
  return first_shared_class(dfa.states, dfa.labels, dfa.states.size(), true);
}

DistinguishVerdict all_nonsingleton_distinguishable(const SemiAutomaton& automaton) {
  const std::size_t n = automaton.degree();
  require_subset_cap(n);
  if (n < 3) return {};
  const std::size_t k = automaton.letter_count();
  CollapseDfa dfa;
  dfa.states = nonsingleton_subsets(n);
  const auto sink = static_cast<std::uint32_t>(dfa.states.size());
  SubsetIndex index(n);
  for (std::uint32_t i = 0; i < dfa.states.size(); ++i) index.insert(dfa.states[i], i);
  for (PointSet s : dfa.states)
    for (std::size_t a = 0; a < k; ++a) {
      const PointSet image = automaton.letter(a).apply(s);
      dfa.transitions.push_back(cardinality(image) == 1 ? sink : index.find(image));
    }
  for (std::size_t a = 0; a < k; ++a) dfa.transitions.push_back(sink);
  dfa.labels.assign(dfa.states.size() + 1, 0);
  dfa.labels.back() = 1;
  detail::moore_refine(k, dfa.transitions, dfa.labels);
  return first_shared_class(dfa.states, dfa.labels, dfa.states.size(), false);
}

DistinguishVerdict all_nonsingleton_cardinality_distinguishable(const SemiAutomaton& automaton) {
  const std::size_t n = automaton.degree();
  require_subset_cap(n);
  if (n < 3) return {};
  const std::size_t k = automaton.letter_count();
  // non-singletons first so witness positions line up with the state list
  std::vector<PointSet> states = nonsingleton_subsets(n);
  const std::size_t nonsingletons = states.size();
  for (Point p = 0; p < n; ++p) states.push_back(singleton(p));
  SubsetIndex index(n);
  for (std::uint32_t i = 0; i < states.size(); ++i) index.insert(states[i], i);
  std::vector<std::uint32_t> transitions;
  transitions.reserve(states.size() * k);
  std::vector<std::uint32_t> labels(states.size());
  for (std::size_t i = 0; i < states.size(); ++i) {
    labels[i] = static_cast<std::uint32_t>(cardinality(states[i]));
    for (std::size_t a = 0; a < k; ++a)
      transitions.push_back(index.find(automaton.letter(a).apply(states[i])));
  }
  detail::moore_refine(k, transitions, labels);
  return first_shared_class(states, labels, nonsingletons, false);
}

namespace {

struct PairKey {
  PointSet s, t;
  friend bool operator==(const PairKey&, const PairKey&) = default;
};

struct PairKeyHash {
  std::size_t operator()(const PairKey& key) const noexcept {
    return static_cast<std::size_t>(key.s * 0x9e3779b97f4a7c15ULL ^ (key.t + 0x632be59bd9b4e019ULL));
  }
};

void require_witness_sets(const SemiAutomaton& automaton, PointSet s, PointSet t) {
  const PointSet domain = full_set(automaton.degree());
  if ((s & ~domain) != 0 || (t & ~domain) != 0) throw Error("malformed sets: point out of range");
  if (s == t) throw Error("malformed sets: S and T must differ");
  if (cardinality(s) < 2 || cardinality(t) < 2)
    throw Error("malformed sets: S and T need at least two points");
}

// Breadth-first search over image pairs; `goal` is tested on discovery,
// `dead` pairs are not expanded.
template <typename Goal, typename Dead>
std::optional<Word> search_pairs(const SemiAutomaton& automaton, PointSet s, PointSet t, Goal goal,
                                 Dead dead) {
  if (goal(s, t)) return Word{};
  std::vector<PairKey> nodes{{s, t}};
  std::vector<std::uint32_t> parent{0};
  std::vector<std::uint32_t> via{0};
  std::unordered_map<PairKey, std::uint32_t, PairKeyHash> seen{{nodes[0], 0}};
  for (std::uint32_t current = 0; current < nodes.size(); ++current) {
    if (dead(nodes[current].s, nodes[current].t)) continue;
    for (std::size_t a = 0; a < automaton.letter_count(); ++a) {
      const PairKey next{automaton.letter(a).apply(nodes[current].s),
                         automaton.letter(a).apply(nodes[current].t)};
      if (seen.contains(next)) continue;
      const auto id = static_cast<std::uint32_t>(nodes.size());
      seen.emplace(next, id);
      nodes.push_back(next);
      parent.push_back(current);
      via.push_back(static_cast<std::uint32_t>(a));
      if (goal(next.s, next.t)) return trace_back(parent, via, id);
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<Word> distinguish_witness(const SemiAutomaton& automaton, PointSet s, PointSet t) {
  require_witness_sets(automaton, s, t);
  return search_pairs(
      automaton, s, t,
      [](PointSet x, PointSet y) { return (cardinality(x) == 1) != (cardinality(y) == 1); },
      [](PointSet x, PointSet y) { return x == y || (cardinality(x) == 1 && cardinality(y) == 1); });
}

std::optional<Word> cardinality_witness(const SemiAutomaton& automaton, PointSet s, PointSet t) {
  require_witness_sets(automaton, s, t);
  return search_pairs(
      automaton, s, t, [](PointSet x, PointSet y) { return cardinality(x) != cardinality(y); },
      [](PointSet x, PointSet y) { return x == y; });
}

SemiAutomaton parse_automaton(std::string_view text) {
  const auto lines = detail::significant_lines(text);
  if (lines.empty()) throw ParseError("empty automaton file");
  const std::size_t n = detail::parse_degree_header(lines.front());
  std::vector<Transformation> letters;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    try {
      letters.push_back(parse_transformation(lines[i].text, n));
    } catch (const Error& e) {
      throw ParseError(e.what(), lines[i].number);
    }
  }
  if (letters.empty()) throw ParseError("automaton needs at least one letter", lines.front().number);
  return SemiAutomaton(n, std::move(letters));
}

SemiAutomaton read_automaton_file(const std::string& path) {
  return parse_automaton(detail::read_file(path));
}

std::string format_automaton(const SemiAutomaton& automaton) {
  std::string out = "degree " + std::to_string(automaton.degree()) + "\n";
  for (const auto& x : automaton.letters()) out += format_image(x) + "\n";
  return out;
}

}  // namespace syncprim
