#include "syncprim/point_set.hpp"

#include <cctype>
#include <charconv>

#include "syncprim/error.hpp"

namespace syncprim {

std::vector<Point> members(PointSet s) {
  std::vector<Point> out;
  out.reserve(static_cast<std::size_t>(cardinality(s)));
  while (s != 0) {
    out.push_back(static_cast<Point>(std::countr_zero(s)));
    s &= s - 1;
  }
  return out;
}

PointSet make_set(const std::vector<Point>& points) {
  PointSet s = 0;
  for (Point p : points) s |= singleton(p);
  return s;
}

std::string format_set(PointSet s) {
  std::string out = "{";
  bool first = true;
  for (Point p : members(s)) {
    if (!first) out += ',';
    out += std::to_string(p);
    first = false;
  }
  out += '}';
  return out;
}

PointSet parse_set(std::string_view text, std::size_t n) {
  PointSet s = 0;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',' ||
                               text[i] == '{' || text[i] == '}'))
      ++i;
  };
  skip();
  while (i < text.size()) {
    unsigned long value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
    if (ec != std::errc{} || ptr == text.data() + i)
      throw ParseError("malformed point set '" + std::string(text) + "'");
    if (value >= n)
      throw ParseError("point " + std::to_string(value) + " out of range for degree " +
                       std::to_string(n));
    if (contains(s, static_cast<Point>(value)))
      throw ParseError("repeated point " + std::to_string(value) + " in set");
    s |= singleton(static_cast<Point>(value));
    i = static_cast<std::size_t>(ptr - text.data());
    skip();
  }
  return s;
}

std::vector<PointSet> k_subsets(std::size_t n, std::size_t k) {
  std::vector<PointSet> out;
  if (k > n) return out;
  std::vector<Point> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = static_cast<Point>(i);
  for (;;) {
    out.push_back(make_set(pick));
    // advance the rightmost position that still has room
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

}  // namespace syncprim
