#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace syncprim::detail {

/// Moore partition refinement of a complete DFA given as a row-major
/// transition table. `labels` holds the initial partition (any ids) and is
/// replaced by the coarsest stable refinement, classes numbered by first
/// appearance in state order. Returns the class count.
std::size_t moore_refine(std::size_t letter_count, std::span<const std::uint32_t> transitions,
                         std::vector<std::uint32_t>& labels);

}  // namespace syncprim::detail
