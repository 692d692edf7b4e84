#include "refine.hpp"

#include <unordered_map>

namespace syncprim::detail {

namespace {

std::size_t renumber(std::vector<std::uint32_t>& labels) {
  std::unordered_map<std::uint32_t, std::uint32_t> ids;
  ids.reserve(labels.size());
  for (auto& label : labels) {
    auto [it, inserted] = ids.try_emplace(label, static_cast<std::uint32_t>(ids.size()));
    label = it->second;
  }
  return ids.size();
}

}  // namespace

std::size_t moore_refine(std::size_t letter_count, std::span<const std::uint32_t> transitions,
                         std::vector<std::uint32_t>& labels) {
  const std::size_t states = labels.size();
  std::size_t count = renumber(labels);
  std::vector<std::uint32_t> previous;
  std::unordered_map<std::uint64_t, std::uint32_t> ids;
  for (;;) {
    previous = labels;
    // Splitting by one letter at a time against the previous round's classes
    // yields the partition by the full successor signature.
    for (std::size_t a = 0; a < letter_count; ++a) {
      ids.clear();
      for (std::size_t s = 0; s < states; ++s) {
        const std::uint64_t key = (std::uint64_t{labels[s]} << 32) |
                                  previous[transitions[s * letter_count + a]];
        auto [it, inserted] = ids.try_emplace(key, static_cast<std::uint32_t>(ids.size()));
        labels[s] = it->second;
      }
    }
    const std::size_t refined = renumber(labels);
    if (refined == count) return count;
    count = refined;
  }
}

}  // namespace syncprim::detail
