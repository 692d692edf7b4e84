#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "syncprim/perm.hpp"
#include "syncprim/point_set.hpp"

namespace syncprim {

inline constexpr std::size_t kDefaultElementCap = 1'000'000;

/// A permutation group given by generators, G = <g_1, ..., g_k> <= S_n.
class GroupSpec {
 public:
  /// Throws Error on an empty generator list, mixed degrees or a
  /// non-bijective generator.
  GroupSpec(std::size_t degree, std::vector<Transformation> generators);

  static GroupSpec trivial(std::size_t n);

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Transformation>& generators() const noexcept { return generators_; }

 private:
  std::size_t degree_;
  std::vector<Transformation> generators_;
};

/// Partition of [n]; classes are sorted and ordered by their least point.
struct BlockSystem {
  std::size_t degree = 0;
  std::vector<PointSet> classes;

  bool is_nontrivial() const noexcept;
  bool is_invariant_under(const GroupSpec& group) const;
  std::string to_string() const;

  friend bool operator==(const BlockSystem&, const BlockSystem&) = default;
};

/// Canonical block system from a class label per point.
BlockSystem block_system_from_labels(const std::vector<std::size_t>& labels);

/// All elements of <G>, identity first then in breadth-first order over the
/// generators. Throws GroupTooLarge when |G| > cap.
std::vector<Transformation> enumerate_elements(const GroupSpec& group,
                                               std::size_t cap = kDefaultElementCap);

PointSet orbit(const GroupSpec& group, Point p);

/// Orbits in order of their least point.
std::vector<PointSet> orbits(const GroupSpec& group);

bool is_transitive(const GroupSpec& group);

/// Single orbit on k-tuples of distinct points. Requires 1 <= k <= n.
bool is_k_transitive(const GroupSpec& group, std::size_t k);

/// Single orbit on k-subsets. Requires 1 <= k <= n.
bool is_k_homogeneous(const GroupSpec& group, std::size_t k);

struct PrimitivityResult {
  bool primitive = true;
  std::optional<BlockSystem> blocks;  // set iff !primitive
};

/// n <= 2 is always primitive. Intransitive groups with n > 2 are reported
/// with their orbit partition (or {0,1} plus singletons for the trivial group).
/// Transitive groups are checked by minimal-block closure from each pair {0,b}.
PrimitivityResult is_primitive(const GroupSpec& group);

/// Finest G-invariant partition in which a and b share a class.
BlockSystem minimal_block_system(const GroupSpec& group, Point a, Point b);

/// First element g (in enumerate_elements order) with g(A) and B disjoint.
std::optional<Transformation> find_separator(const GroupSpec& group, PointSet a, PointSet b,
                                             std::size_t cap = kDefaultElementCap);

/// Same, over a precomputed element list.
std::optional<Transformation> find_separator(const std::vector<Transformation>& elements,
                                             PointSet a, PointSet b);

/// Text format: first non-comment line "degree n", then one generator per
/// non-empty line as an image list or in cycle notation. '#' starts a comment.
/// Throws ParseError with the offending line number.
GroupSpec parse_group(std::string_view text);
GroupSpec read_group_file(const std::string& path);

std::string format_group(const GroupSpec& group);

}  // namespace syncprim
