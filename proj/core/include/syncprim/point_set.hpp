#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace syncprim {

using Point = std::uint32_t;

/// Subset of [n] as a bit set, bit i set iff point i is a member. Holds n <= 64.
using PointSet = std::uint64_t;

inline constexpr std::size_t kMaxDegree = 64;

/// Largest degree for which any 2^n construction is attempted.
inline constexpr std::size_t kSubsetDegreeCap = 24;

constexpr PointSet full_set(std::size_t n) noexcept {
  return n >= 64 ? ~PointSet{0} : (PointSet{1} << n) - 1;
}

constexpr PointSet singleton(Point p) noexcept { return PointSet{1} << p; }

constexpr int cardinality(PointSet s) noexcept { return std::popcount(s); }

constexpr bool contains(PointSet s, Point p) noexcept { return (s >> p) & 1u; }

std::vector<Point> members(PointSet s);

PointSet make_set(const std::vector<Point>& points);

/// Serializes as a sorted point list in braces, e.g. "{0,2}".
std::string format_set(PointSet s);

/// Accepts "{0,2}", "0,2" or "0 2". Throws ParseError on points >= n or repeats.
PointSet parse_set(std::string_view text, std::size_t n);

/// All k-subsets of [n] in lexicographic order of their sorted member lists.
std::vector<PointSet> k_subsets(std::size_t n, std::size_t k);

}  // namespace syncprim
