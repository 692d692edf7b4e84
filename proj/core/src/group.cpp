#include "syncprim/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <unordered_set>

#include "syncprim/error.hpp"
#include "text_input.hpp"

namespace syncprim {

GroupSpec::GroupSpec(std::size_t degree, std::vector<Transformation> generators)
    : degree_(degree), generators_(std::move(generators)) {
  if (degree_ == 0) throw Error("group of degree 0");
  if (degree_ > kMaxDegree) throw DegreeCapExceeded(degree_, kMaxDegree);
  if (generators_.empty()) throw Error("group needs at least one generator");
  for (const auto& g : generators_) {
    if (g.degree() != degree_) throw Error("degree mismatch");
    if (!g.is_permutation()) throw Error("generator " + format_image(g) + " is not a permutation");
  }
}

GroupSpec GroupSpec::trivial(std::size_t n) { return GroupSpec(n, {Transformation::identity(n)}); }

bool BlockSystem::is_nontrivial() const noexcept {
  if (classes.size() <= 1) return false;
  return std::any_of(classes.begin(), classes.end(),
                     [](PointSet c) { return cardinality(c) >= 2; });
}

bool BlockSystem::is_invariant_under(const GroupSpec& group) const {
  for (const auto& g : group.generators())
    for (PointSet c : classes)
      if (std::find(classes.begin(), classes.end(), g.apply(c)) == classes.end()) return false;
  return true;
}

std::string BlockSystem::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (i > 0) out += ',';
    out += format_set(classes[i]);
  }
  return out + "}";
}

BlockSystem block_system_from_labels(const std::vector<std::size_t>& labels) {
  BlockSystem blocks;
  blocks.degree = labels.size();
  std::vector<std::size_t> slot(labels.size(), SIZE_MAX);
  for (std::size_t p = 0; p < labels.size(); ++p) {
    const std::size_t label = labels[p];
    if (label >= slot.size()) throw Error("block label out of range");
    if (slot[label] == SIZE_MAX) {
      slot[label] = blocks.classes.size();
      blocks.classes.push_back(0);
    }
    blocks.classes[slot[label]] |= singleton(static_cast<Point>(p));
  }
  return blocks;
}

std::vector<Transformation> enumerate_elements(const GroupSpec& group, std::size_t cap) {
  std::vector<Transformation> elements{Transformation::identity(group.degree())};
  std::unordered_set<Transformation, TransformationHash> seen(elements.begin(), elements.end());
  for (std::size_t next = 0; next < elements.size(); ++next) {
    for (const auto& g : group.generators()) {
      Transformation product = compose(g, elements[next]);
      if (seen.contains(product)) continue;
      if (elements.size() == cap) throw GroupTooLarge(elements.size());
      seen.insert(product);
      elements.push_back(std::move(product));
    }
  }
  return elements;
}

PointSet orbit(const GroupSpec& group, Point p) {
  PointSet reached = singleton(p);
  std::vector<Point> frontier{p};
  while (!frontier.empty()) {
    const Point x = frontier.back();
    frontier.pop_back();
    for (const auto& g : group.generators()) {
      const Point y = g(x);
      if (!contains(reached, y)) {
        reached |= singleton(y);
        frontier.push_back(y);
      }
    }
  }
  return reached;
}

std::vector<PointSet> orbits(const GroupSpec& group) {
  std::vector<PointSet> out;
  PointSet covered = 0;
  for (Point p = 0; p < group.degree(); ++p) {
    if (contains(covered, p)) continue;
    out.push_back(orbit(group, p));
    covered |= out.back();
  }
  return out;
}

bool is_transitive(const GroupSpec& group) {
  return orbit(group, 0) == full_set(group.degree());
}

bool is_k_transitive(const GroupSpec& group, std::size_t k) {
  const std::size_t n = group.degree();
  if (k < 1 || k > n) throw Error("k must lie in [1, n]");
  std::uint64_t tuples = 1;
  for (std::size_t i = 0; i < k; ++i) tuples *= n - i;

  std::vector<Point> start(k);
  std::iota(start.begin(), start.end(), Point{0});
  std::set<std::vector<Point>> seen{start};
  std::vector<std::vector<Point>> frontier{start};
  while (!frontier.empty()) {
    std::vector<Point> tuple = std::move(frontier.back());
    frontier.pop_back();
    for (const auto& g : group.generators()) {
      std::vector<Point> moved(k);
      for (std::size_t i = 0; i < k; ++i) moved[i] = g(tuple[i]);
      if (seen.insert(moved).second) frontier.push_back(std::move(moved));
    }
  }
  return seen.size() == tuples;
}

bool is_k_homogeneous(const GroupSpec& group, std::size_t k) {
  const std::size_t n = group.degree();
  if (k < 1 || k > n) throw Error("k must lie in [1, n]");
  std::uint64_t subsets = 1;
  for (std::size_t i = 0; i < k; ++i) subsets = subsets * (n - i) / (i + 1);

  const PointSet start = full_set(k);
  std::unordered_set<PointSet> seen{start};
  std::vector<PointSet> frontier{start};
  while (!frontier.empty()) {
    const PointSet s = frontier.back();
    frontier.pop_back();
    for (const auto& g : group.generators()) {
      const PointSet moved = g.apply(s);
      if (seen.insert(moved).second) frontier.push_back(moved);
    }
  }
  return seen.size() == subsets;
}

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

BlockSystem minimal_block_system(const GroupSpec& group, Point a, Point b) {
  const std::size_t n = group.degree();
  UnionFind classes(n);
  std::deque<std::pair<Point, Point>> pending;
  if (classes.unite(a, b)) pending.emplace_back(a, b);
  while (!pending.empty()) {
    auto [x, y] = pending.front();
    pending.pop_front();
    for (const auto& g : group.generators())
      if (classes.unite(g(x), g(y))) pending.emplace_back(g(x), g(y));
  }
  std::vector<std::size_t> labels(n);
  for (std::size_t p = 0; p < n; ++p) labels[p] = classes.find(p);
  return block_system_from_labels(labels);
}

PrimitivityResult is_primitive(const GroupSpec& group) {
  const std::size_t n = group.degree();
  if (n <= 2) return {};

  if (!is_transitive(group)) {
    BlockSystem blocks{n, orbits(group)};
    if (!blocks.is_nontrivial()) {
      // every orbit is a point, so G is trivial and any partition is invariant
      std::vector<std::size_t> labels(n);
      std::iota(labels.begin(), labels.end(), 0);
      labels[1] = 0;
      blocks = block_system_from_labels(labels);
    }
    return {false, std::move(blocks)};
  }

  for (Point b = 1; b < n; ++b) {
    BlockSystem blocks = minimal_block_system(group, 0, b);
    if (blocks.classes.size() > 1) return {false, std::move(blocks)};
  }
  return {};
}

std::optional<Transformation> find_separator(const std::vector<Transformation>& elements,
                                             PointSet a, PointSet b) {
  for (const auto& g : elements)
    if ((g.apply(a) & b) == 0) return g;
  return std::nullopt;
}

std::optional<Transformation> find_separator(const GroupSpec& group, PointSet a, PointSet b,
                                             std::size_t cap) {
  const PointSet domain = full_set(group.degree());
  if (a == 0 || b == 0 || (a & ~domain) != 0 || (b & ~domain) != 0)
    throw Error("separator sets must be non-empty subsets of [n]");
  return find_separator(enumerate_elements(group, cap), a, b);
}

GroupSpec parse_group(std::string_view text) {
  const auto lines = detail::significant_lines(text);
  if (lines.empty()) throw ParseError("empty group file");
  const std::size_t n = detail::parse_degree_header(lines.front());
  std::vector<Transformation> generators;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    try {
      generators.push_back(parse_permutation(lines[i].text, n));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), lines[i].number);
    } catch (const Error& e) {
      throw ParseError(e.what(), lines[i].number);
    }
  }
  if (generators.empty()) generators.push_back(Transformation::identity(n));
  return GroupSpec(n, std::move(generators));
}

GroupSpec read_group_file(const std::string& path) { return parse_group(detail::read_file(path)); }

std::string format_group(const GroupSpec& group) {
  std::string out = "<";
  for (std::size_t i = 0; i < group.generators().size(); ++i) {
    if (i > 0) out += ", ";
    out += format_cycles(group.generators()[i]);
  }
  return out + ">";
}

}  // namespace syncprim
