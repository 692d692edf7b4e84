#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <numeric>

namespace oracle {

namespace {

Map identity(std::size_t n) {
  Map id(n);
  std::iota(id.begin(), id.end(), 0u);
  return id;
}

bool singleton(Set s) { return std::popcount(s) == 1; }

std::vector<Set> nonsingleton_subsets(std::size_t n) {
  std::vector<Set> out;
  for (Set s = 1; s < (Set{1} << n); ++s)
    if (std::popcount(s) >= 2) out.push_back(s);
  return out;
}

}  // namespace

Map to_map(const syncprim::Transformation& t) { return Map(t.image().begin(), t.image().end()); }

std::vector<Map> to_maps(const std::vector<syncprim::Transformation>& ts) {
  std::vector<Map> out;
  for (const auto& t : ts) out.push_back(to_map(t));
  return out;
}

Map compose(const Map& f, const Map& g) {
  Map out(g.size());
  for (std::size_t x = 0; x < g.size(); ++x) out[x] = f[g[x]];
  return out;
}

std::size_t rank(const Map& f) { return std::set<std::uint32_t>(f.begin(), f.end()).size(); }

Set image(const Map& f, Set s) {
  Set out = 0;
  for (std::size_t x = 0; x < f.size(); ++x)
    if ((s >> x) & 1u) out |= Set{1} << f[x];
  return out;
}

std::vector<Map> maps_of_rank(std::size_t n, std::size_t r) {
  std::vector<Map> out;
  Map digits(n, 0);
  for (;;) {
    if (rank(digits) == r) out.push_back(digits);
    std::size_t i = n;
    while (i > 0 && digits[i - 1] + 1 == n) digits[--i] = 0;
    if (i == 0) break;
    ++digits[i - 1];
  }
  return out;
}

std::set<Map> monoid(std::size_t n, const std::vector<Map>& gens) {
  std::set<Map> out;
  for (auto& [m, depth] : monoid_with_depth(n, gens)) out.insert(m);
  return out;
}

std::vector<std::pair<Map, std::size_t>> monoid_with_depth(std::size_t n,
                                                           const std::vector<Map>& gens) {
  std::map<Map, std::size_t> depth{{identity(n), 0}};
  std::deque<Map> queue{identity(n)};
  while (!queue.empty()) {
    const Map m = queue.front();
    queue.pop_front();
    for (const Map& g : gens) {
      // appending letter g to a word for m
      Map next = compose(g, m);
      if (depth.emplace(next, depth[m] + 1).second) queue.push_back(std::move(next));
    }
  }
  return {depth.begin(), depth.end()};
}

std::set<Set> orbit_of_set(std::size_t n, const std::vector<Map>& gens, Set s) {
  std::set<Set> out;
  for (const Map& m : monoid(n, gens)) out.insert(image(m, s));
  return out;
}

bool transitive(std::size_t n, const std::vector<Map>& gens) {
  return orbit_of_set(n, gens, 1).size() == n;
}

bool k_transitive(std::size_t n, const std::vector<Map>& gens, std::size_t k) {
  const auto elements = monoid(n, gens);
  // orbit of the tuple (0, 1, ..., k-1) must hit n!/(n-k)! tuples
  std::set<Map> tuples;
  for (const Map& m : elements) tuples.insert(Map(m.begin(), m.begin() + static_cast<long>(k)));
  std::size_t expected = 1;
  for (std::size_t i = 0; i < k; ++i) expected *= n - i;
  return tuples.size() == expected;
}

bool k_homogeneous(std::size_t n, const std::vector<Map>& gens, std::size_t k) {
  std::size_t expected = 1;
  for (std::size_t i = 0; i < k; ++i) expected = expected * (n - i) / (i + 1);
  return orbit_of_set(n, gens, (Set{1} << k) - 1).size() == expected;
}

std::vector<std::vector<std::size_t>> set_partitions(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> labels(n, 0);
  auto rec = [&](auto&& self, std::size_t i, std::size_t used) -> void {
    if (i == n) {
      out.push_back(labels);
      return;
    }
    for (std::size_t c = 0; c <= used && c < n; ++c) {
      labels[i] = c;
      self(self, i + 1, std::max(used, c + 1));
    }
  };
  if (n > 0) rec(rec, 0, 0);
  return out;
}

std::optional<std::vector<std::size_t>> invariant_partition(std::size_t n,
                                                            const std::vector<Map>& gens) {
  if (n <= 2) return std::nullopt;
  for (const auto& labels : set_partitions(n)) {
    const std::size_t classes = *std::max_element(labels.begin(), labels.end()) + 1;
    if (classes == 1 || classes == n) continue;
    bool invariant = true;
    for (const Map& g : gens)
      for (std::size_t x = 0; x < n && invariant; ++x)
        for (std::size_t y = 0; y < n && invariant; ++y)
          if (labels[x] == labels[y] && labels[g[x]] != labels[g[y]]) invariant = false;
    if (invariant) return labels;
  }
  return std::nullopt;
}

bool primitive(std::size_t n, const std::vector<Map>& gens) {
  return !invariant_partition(n, gens).has_value();
}

std::size_t syn_state_count(std::size_t n, const std::vector<Map>& letters) {
  const auto m = monoid(n, letters);
  const Set full = (Set{1} << n) - 1;
  std::set<Set> reachable;
  for (const Map& w : m) reachable.insert(image(w, full));
  // signature: which monoid elements send the subset to a singleton
  std::set<std::vector<bool>> classes;
  for (Set s : reachable) {
    std::vector<bool> signature;
    for (const Map& w : m) signature.push_back(singleton(image(w, s)));
    classes.insert(signature);
  }
  return classes.size();
}

std::optional<std::size_t> reset_length(std::size_t n, const std::vector<Map>& letters) {
  std::optional<std::size_t> best;
  for (const auto& [m, depth] : monoid_with_depth(n, letters))
    if (rank(m) == 1 && (!best || depth < *best)) best = depth;
  return best;
}

bool completely_reachable(std::size_t n, const std::vector<Map>& letters) {
  const Set full = (Set{1} << n) - 1;
  std::set<Set> reachable;
  for (const Map& w : monoid(n, letters)) reachable.insert(image(w, full));
  return reachable.size() == full;  // every non-empty subset
}

bool distinguishable(const std::set<Map>& m, Set s, Set t) {
  return std::any_of(m.begin(), m.end(), [&](const Map& w) {
    return singleton(image(w, s)) != singleton(image(w, t));
  });
}

bool cardinality_separable(const std::set<Map>& m, Set s, Set t) {
  return std::any_of(m.begin(), m.end(), [&](const Map& w) {
    return std::popcount(image(w, s)) != std::popcount(image(w, t));
  });
}

namespace {

template <typename Pred, typename Keep>
bool all_pairs(const std::vector<Set>& sets, Keep keep, Pred pred) {
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = i + 1; j < sets.size(); ++j)
      if (keep(sets[i], sets[j]) && !pred(sets[i], sets[j])) return false;
  return true;
}

std::vector<Set> two_subsets(std::size_t n) {
  std::vector<Set> out;
  for (Set s : nonsingleton_subsets(n))
    if (std::popcount(s) == 2) out.push_back(s);
  return out;
}

}  // namespace

bool all_2subsets_distinguishable(std::size_t n, const std::set<Map>& m) {
  return all_pairs(
      two_subsets(n), [](Set, Set) { return true; },
      [&](Set s, Set t) { return distinguishable(m, s, t); });
}

bool disjoint_2subsets_distinguishable(std::size_t n, const std::set<Map>& m) {
  return all_pairs(
      two_subsets(n), [](Set s, Set t) { return (s & t) == 0; },
      [&](Set s, Set t) { return distinguishable(m, s, t); });
}

bool all_nonsingleton_distinguishable(std::size_t n, const std::set<Map>& m) {
  return all_pairs(
      nonsingleton_subsets(n), [](Set, Set) { return true; },
      [&](Set s, Set t) { return distinguishable(m, s, t); });
}

bool all_nonsingleton_cardinality_separable(std::size_t n, const std::set<Map>& m) {
  return all_pairs(
      nonsingleton_subsets(n), [](Set, Set) { return true; },
      [&](Set s, Set t) { return cardinality_separable(m, s, t); });
}

bool strongly_sync_maximal(std::size_t n, const std::vector<Map>& gens) {
  for (std::size_t r = 2; r + 1 <= n; ++r)
    for (const Map& f : maps_of_rank(n, r)) {
      std::vector<Map> letters = gens;
      letters.push_back(f);
      if (!all_2subsets_distinguishable(n, monoid(n, letters))) return false;
    }
  return true;
}

std::vector<Map> automaton_letters(const syncprim::SemiAutomaton& a) {
  return to_maps(a.letters());
}

}  // namespace oracle
