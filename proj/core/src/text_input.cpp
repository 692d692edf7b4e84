#include "text_input.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "syncprim/error.hpp"
#include "syncprim/point_set.hpp"

namespace syncprim::detail {

std::vector<TextLine> significant_lines(std::string_view text) {
  std::vector<TextLine> out;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view line = text.substr(start, end - start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first != std::string_view::npos) {
      const auto last = line.find_last_not_of(" \t\r");
      out.push_back({number, std::string(line.substr(first, last - first + 1))});
    }
    start = end + 1;
  }
  return out;
}

std::size_t parse_degree_header(const TextLine& line) {
  std::string_view text = line.text;
  constexpr std::string_view kKeyword = "degree";
  if (text.substr(0, kKeyword.size()) != kKeyword)
    throw ParseError("expected header 'degree n'", line.number);
  text.remove_prefix(kKeyword.size());
  const auto first = text.find_first_not_of(" \t");
  if (first == std::string_view::npos || first == 0)
    throw ParseError("expected header 'degree n'", line.number);
  text.remove_prefix(first);
  std::size_t n = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), n);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw ParseError("malformed degree '" + std::string(text) + "'", line.number);
  if (n == 0 || n > kMaxDegree)
    throw ParseError("degree must lie in [1, " + std::to_string(kMaxDegree) + "]", line.number);
  return n;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace syncprim::detail
