#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace syncprim {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised on malformed text input; line is 1-based, 0 when not applicable.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class GroupTooLarge : public Error {
 public:
  explicit GroupTooLarge(std::size_t partial_count)
      : Error("group too large (enumerated " + std::to_string(partial_count) +
              " elements before hitting the cap)"),
        partial_count_(partial_count) {}

  std::size_t partial_count() const noexcept { return partial_count_; }

 private:
  std::size_t partial_count_;
};

class DegreeCapExceeded : public Error {
 public:
  DegreeCapExceeded(std::size_t degree, std::size_t cap)
      : Error("degree " + std::to_string(degree) + " exceeds cap " + std::to_string(cap)),
        degree_(degree),
        cap_(cap) {}

  std::size_t degree() const noexcept { return degree_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t degree_;
  std::size_t cap_;
};

}  // namespace syncprim
