#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace syncprim::detail {

struct TextLine {
  std::size_t number;  // 1-based
  std::string text;    // comment stripped and trimmed, never empty
};

std::vector<TextLine> significant_lines(std::string_view text);

/// Reads "degree n" from a header line. Throws ParseError.
std::size_t parse_degree_header(const TextLine& line);

std::string read_file(const std::string& path);

}  // namespace syncprim::detail
