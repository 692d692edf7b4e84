#include "syncprim/perm.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "syncprim/error.hpp"

namespace syncprim {

Transformation::Transformation(std::vector<Point> image) : image_(std::move(image)) {
  if (image_.empty()) throw Error("transformation of degree 0");
  if (image_.size() > kMaxDegree)
    throw DegreeCapExceeded(image_.size(), kMaxDegree);
  for (Point p : image_)
    if (p >= image_.size())
      throw Error("image entry " + std::to_string(p) + " out of range for degree " +
                  std::to_string(image_.size()));
}

Transformation Transformation::identity(std::size_t n) {
  std::vector<Point> image(n);
  for (std::size_t i = 0; i < n; ++i) image[i] = static_cast<Point>(i);
  return Transformation(std::move(image));
}

Transformation Transformation::constant(std::size_t n, Point value) {
  return Transformation(std::vector<Point>(n, value));
}

Transformation Transformation::from_cycles(std::size_t n,
                                           const std::vector<std::vector<Point>>& cycles) {
  if (n == 0) throw Error("transformation of degree 0");
  if (n > kMaxDegree) throw DegreeCapExceeded(n, kMaxDegree);
  std::vector<Point> image(n);
  for (std::size_t i = 0; i < n; ++i) image[i] = static_cast<Point>(i);
  PointSet seen = 0;
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      Point p = cycle[i];
      if (p >= n)
        throw ParseError("cycle point " + std::to_string(p) + " out of range for degree " +
                         std::to_string(n));
      if (contains(seen, p)) throw ParseError("repeated cycle point " + std::to_string(p));
      seen |= singleton(p);
      image[p] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Transformation(std::move(image));
}

PointSet Transformation::apply(PointSet s) const noexcept {
  PointSet out = 0;
  while (s != 0) {
    out |= singleton(image_[static_cast<std::size_t>(std::countr_zero(s))]);
    s &= s - 1;
  }
  return out;
}

PointSet Transformation::image_set() const noexcept {
  PointSet out = 0;
  for (Point p : image_) out |= singleton(p);
  return out;
}

std::size_t Transformation::rank() const noexcept {
  return static_cast<std::size_t>(cardinality(image_set()));
}

bool Transformation::is_idempotent() const noexcept {
  for (Point p : image_)
    if (image_[p] != p) return false;
  return true;
}

Transformation Transformation::inverse() const {
  if (!is_permutation()) throw Error("inverse of a non-permutation");
  std::vector<Point> inv(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) inv[image_[i]] = static_cast<Point>(i);
  return Transformation(std::move(inv));
}

std::size_t TransformationHash::operator()(const Transformation& t) const noexcept {
  // FNV-1a over the image entries
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (Point p : t.image()) {
    h ^= p;
    h *= 0x100000001b3ULL;
  }
  return static_cast<std::size_t>(h);
}

Transformation compose(const Transformation& f, const Transformation& g) {
  if (f.degree() != g.degree()) throw Error("degree mismatch");
  std::vector<Point> image(g.degree());
  for (std::size_t i = 0; i < image.size(); ++i) image[i] = f(g(static_cast<Point>(i)));
  return Transformation(std::move(image));
}

Transformation idempotent_power(const Transformation& f) {
  Transformation power = f;
  while (!power.is_idempotent()) power = compose(power, f);
  return power;
}

bool acts_injectively(const Transformation& f, PointSet s) noexcept {
  std::vector<int> fiber_hits(f.degree(), 0);
  for (Point p : members(s))
    if (++fiber_hits[f(p)] > 1) return false;
  return true;
}

std::uint64_t map_count(std::size_t n) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (total > UINT64_MAX / n) throw Error("n^n overflows for n = " + std::to_string(n));
    total *= n;
  }
  return total;
}

Transformation map_from_index(std::size_t n, std::uint64_t index) {
  std::vector<Point> image(n);
  for (std::size_t i = n; i-- > 0;) {
    image[i] = static_cast<Point>(index % n);
    index /= n;
  }
  return Transformation(std::move(image));
}

namespace {

// Depth-first fill of the image array in lexicographic order, pruned so that
// the number of distinct values used ends at exactly `rank`.
class RankWalker {
 public:
  RankWalker(std::size_t n, std::size_t rank, const TransformationVisitor& visit)
      : n_(n), rank_(rank), visit_(visit), image_(n), uses_(n, 0) {}

  void run() { step(0, 0); }

 private:
  bool step(std::size_t pos, std::size_t distinct) {
    if (pos == n_) return distinct == rank_ ? visit_(Transformation(image_)) : true;
    const std::size_t remaining = n_ - pos - 1;
    for (std::size_t v = 0; v < n_; ++v) {
      const std::size_t next = distinct + (uses_[v] == 0 ? 1 : 0);
      if (next > rank_ || next + remaining < rank_) continue;
      image_[pos] = static_cast<Point>(v);
      ++uses_[v];
      const bool keep_going = step(pos + 1, next);
      --uses_[v];
      if (!keep_going) return false;
    }
    return true;
  }

  std::size_t n_;
  std::size_t rank_;
  const TransformationVisitor& visit_;
  std::vector<Point> image_;
  std::vector<std::size_t> uses_;
};

}  // namespace

void for_each_map_of_rank(std::size_t n, std::size_t r, const TransformationVisitor& visit) {
  if (n == 0 || r < 1 || r > n) return;
  if (n > kMaxDegree) throw DegreeCapExceeded(n, kMaxDegree);
  RankWalker(n, r, visit).run();
}

std::vector<Transformation> enumerate_maps_of_rank(std::size_t n, std::size_t r) {
  std::vector<Transformation> out;
  for_each_map_of_rank(n, r, [&](const Transformation& f) {
    out.push_back(f);
    return true;
  });
  return out;
}

std::vector<Transformation> enumerate_rank_n_minus_1(std::size_t n) {
  if (n < 2) return {};
  return enumerate_maps_of_rank(n, n - 1);
}

std::vector<Transformation> enumerate_idempotents_rank_n_minus_1(std::size_t n) {
  std::vector<Transformation> out;
  if (n < 2) return out;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b) continue;
      std::vector<Point> image(n);
      for (std::size_t i = 0; i < n; ++i) image[i] = static_cast<Point>(i);
      image[a] = static_cast<Point>(b);
      out.emplace_back(std::move(image));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Transformation> enumerate_permutations(std::size_t n) {
  return enumerate_maps_of_rank(n, n);
}

std::string format_image(const Transformation& f) {
  std::string out;
  for (std::size_t i = 0; i < f.degree(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(f[i]);
  }
  return out;
}

std::string format_cycles(const Transformation& f) {
  if (!f.is_permutation()) throw Error("cycle notation requires a permutation");
  std::string out;
  std::vector<bool> done(f.degree(), false);
  for (std::size_t start = 0; start < f.degree(); ++start) {
    if (done[start] || f[start] == start) continue;
    out += '(';
    Point p = static_cast<Point>(start);
    bool first = true;
    while (!done[p]) {
      done[p] = true;
      if (!first) out += ' ';
      out += std::to_string(p);
      first = false;
      p = f(p);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

namespace {

bool is_blank(char c) { return std::isspace(static_cast<unsigned char>(c)) || c == ','; }

Point read_point(std::string_view text, std::size_t& i) {
  unsigned long value = 0;
  auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
  if (ec != std::errc{} || ptr == text.data() + i)
    throw ParseError("unexpected character '" + std::string(1, text[i]) + "'");
  if (value > kMaxDegree) throw ParseError("point " + std::to_string(value) + " out of range");
  i = static_cast<std::size_t>(ptr - text.data());
  return static_cast<Point>(value);
}

Transformation parse_cycles(std::string_view text, std::size_t degree) {
  if (degree == 0) throw ParseError("cycle notation needs an explicit degree");
  std::vector<std::vector<Point>> cycles;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (text[i] != '(') throw ParseError("expected '(' in cycle notation");
    ++i;
    std::vector<Point> cycle;
    for (;;) {
      while (i < text.size() && is_blank(text[i])) ++i;
      if (i == text.size()) throw ParseError("unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      cycle.push_back(read_point(text, i));
    }
    cycles.push_back(std::move(cycle));
  }
  return Transformation::from_cycles(degree, cycles);
}

}  // namespace

Transformation parse_transformation(std::string_view text, std::size_t degree) {
  if (text.find('(') != std::string_view::npos) return parse_cycles(text, degree);
  std::vector<Point> image;
  std::size_t i = 0;
  for (;;) {
    while (i < text.size() && is_blank(text[i])) ++i;
    if (i == text.size()) break;
    image.push_back(read_point(text, i));
  }
  if (image.empty()) throw ParseError("empty transformation");
  if (degree != 0 && image.size() != degree)
    throw ParseError("expected " + std::to_string(degree) + " image entries, got " +
                     std::to_string(image.size()));
  for (Point p : image)
    if (p >= image.size())
      throw ParseError("image entry " + std::to_string(p) + " out of range for degree " +
                       std::to_string(image.size()));
  return Transformation(std::move(image));
}

Transformation parse_permutation(std::string_view text, std::size_t degree) {
  Transformation t = parse_transformation(text, degree);
  if (!t.is_permutation()) throw ParseError("not a permutation: " + format_image(t));
  return t;
}

}  // namespace syncprim
