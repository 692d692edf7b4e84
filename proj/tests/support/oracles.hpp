#pragma once

// Brute-force reference implementations. They share only the data types with
// the library and favour obviousness over speed; keep n small.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "syncprim/automaton.hpp"
#include "syncprim/group.hpp"

namespace oracle {

using Map = std::vector<std::uint32_t>;
using Set = std::uint64_t;

Map to_map(const syncprim::Transformation& t);
std::vector<Map> to_maps(const std::vector<syncprim::Transformation>& ts);

// (f o g)(x) = f(g(x))
Map compose(const Map& f, const Map& g);
std::size_t rank(const Map& f);
Set image(const Map& f, Set s);

// Every map [n] -> [n] of the given rank, lexicographic by image.
std::vector<Map> maps_of_rank(std::size_t n, std::size_t r);

// Transformation monoid generated by `gens`, identity included.
std::set<Map> monoid(std::size_t n, const std::vector<Map>& gens);

// Monoid elements paired with the length of a shortest word producing them.
std::vector<std::pair<Map, std::size_t>> monoid_with_depth(std::size_t n,
                                                           const std::vector<Map>& gens);

std::set<Set> orbit_of_set(std::size_t n, const std::vector<Map>& gens, Set s);

bool transitive(std::size_t n, const std::vector<Map>& gens);
bool k_transitive(std::size_t n, const std::vector<Map>& gens, std::size_t k);
bool k_homogeneous(std::size_t n, const std::vector<Map>& gens, std::size_t k);

// Every set partition of [n] as a label vector (restricted growth strings).
std::vector<std::vector<std::size_t>> set_partitions(std::size_t n);

// Some non-trivial partition invariant under every generator; n <= 2 never has one.
std::optional<std::vector<std::size_t>> invariant_partition(std::size_t n,
                                                            const std::vector<Map>& gens);
bool primitive(std::size_t n, const std::vector<Map>& gens);

// Myhill-Nerode classes of the reachable subsets w.r.t. "image is a singleton".
std::size_t syn_state_count(std::size_t n, const std::vector<Map>& letters);
std::optional<std::size_t> reset_length(std::size_t n, const std::vector<Map>& letters);
bool completely_reachable(std::size_t n, const std::vector<Map>& letters);

// Some monoid element maps exactly one of s, t to a singleton.
bool distinguishable(const std::set<Map>& m, Set s, Set t);
// Some monoid element sends s and t to sets of different size.
bool cardinality_separable(const std::set<Map>& m, Set s, Set t);

bool all_2subsets_distinguishable(std::size_t n, const std::set<Map>& m);
bool disjoint_2subsets_distinguishable(std::size_t n, const std::set<Map>& m);
bool all_nonsingleton_distinguishable(std::size_t n, const std::set<Map>& m);
bool all_nonsingleton_cardinality_separable(std::size_t n, const std::set<Map>& m);

// Definition-level strong sync-maximality via monoid closures; n <= 5.
bool strongly_sync_maximal(std::size_t n, const std::vector<Map>& gens);

std::vector<Map> automaton_letters(const syncprim::SemiAutomaton& a);

}  // namespace oracle
