#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "syncprim/point_set.hpp"

namespace syncprim {

/// A total map on [n] = {0, ..., n-1} stored as its image array.
///
/// Composition follows the right-applied-first convention: compose(f, g) is
/// the map x -> f(g(x)). A word x_1 x_2 ... x_m read left to right acts as
/// x_m o ... o x_1.
class Transformation {
 public:
  Transformation() = default;

  /// Throws Error if the image is empty, longer than kMaxDegree, or has an
  /// entry outside [0, n).
  explicit Transformation(std::vector<Point> image);

  static Transformation identity(std::size_t n);
  static Transformation constant(std::size_t n, Point value);

  /// Permutation from disjoint cycles; points not mentioned are fixed.
  static Transformation from_cycles(std::size_t n, const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const noexcept { return image_.size(); }
  std::span<const Point> image() const noexcept { return image_; }
  Point operator()(Point x) const noexcept { return image_[x]; }
  Point operator[](std::size_t x) const noexcept { return image_[x]; }

  /// Image of a point set, f(S) = { f(s) : s in S }.
  PointSet apply(PointSet s) const noexcept;

  std::size_t rank() const noexcept;
  bool is_permutation() const noexcept { return rank() == degree(); }
  bool is_idempotent() const noexcept;

  /// Set of points in the image.
  PointSet image_set() const noexcept;

  /// Inverse of a permutation. Throws Error if not bijective.
  Transformation inverse() const;

  friend bool operator==(const Transformation&, const Transformation&) = default;
  friend auto operator<=>(const Transformation& a, const Transformation& b) {
    return a.image_ <=> b.image_;
  }

 private:
  std::vector<Point> image_;
};

struct TransformationHash {
  std::size_t operator()(const Transformation& t) const noexcept;
};

/// (f o g)(x) = f(g(x)). Throws Error("degree mismatch") on unequal degrees.
Transformation compose(const Transformation& f, const Transformation& g);

inline std::size_t rank(const Transformation& f) noexcept { return f.rank(); }

/// f^m for the least m >= 1 with f^m idempotent.
Transformation idempotent_power(const Transformation& f);

/// Lemma check: |f(S)| = |S| iff every fiber of f meets S in at most one point.
bool acts_injectively(const Transformation& f, PointSet s) noexcept;

// Enumeration. Every enumerator yields maps in lexicographic order of the
// image array. Visitors return false to stop early.
using TransformationVisitor = std::function<bool(const Transformation&)>;

/// Number of maps on [n], n^n. Throws Error when it does not fit in 64 bits.
std::uint64_t map_count(std::size_t n);

/// The map with lexicographic index `index` among all n^n maps.
Transformation map_from_index(std::size_t n, std::uint64_t index);

/// Visits all maps of exactly rank r; nothing when r is outside [1, n].
void for_each_map_of_rank(std::size_t n, std::size_t r, const TransformationVisitor& visit);

std::vector<Transformation> enumerate_maps_of_rank(std::size_t n, std::size_t r);

/// C(n,2) * n! maps; empty for n < 2.
std::vector<Transformation> enumerate_rank_n_minus_1(std::size_t n);

/// The n(n-1) maps sending one point a to b != a and fixing the rest.
std::vector<Transformation> enumerate_idempotents_rank_n_minus_1(std::size_t n);

std::vector<Transformation> enumerate_permutations(std::size_t n);

// Text formats.

/// "1 1 2 3 4"
std::string format_image(const Transformation& f);

/// Cycle notation with fixed points omitted, "()" for the identity.
/// Throws Error if f is not a permutation.
std::string format_cycles(const Transformation& f);

/// Parses an image list, or cycle notation when the text contains '('.
/// degree = 0 infers n from the image list length; cycle notation needs n.
Transformation parse_transformation(std::string_view text, std::size_t degree = 0);

/// As parse_transformation, additionally requiring a bijection.
Transformation parse_permutation(std::string_view text, std::size_t degree = 0);

}  // namespace syncprim
