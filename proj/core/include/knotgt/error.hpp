#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace knotgt {

// Base class for every error raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Operands belong to different groups or factor specifications.
struct SpecMismatch : Error {
  using Error::Error;
};

// Out-of-range parameter or precondition misuse.
struct InvalidArgument : Error {
  using Error::Error;
};

// Rejected text input; line and column are 1-based.
struct ParseError : Error {
  ParseError(const std::string& what, std::size_t line_, std::size_t col_)
      : Error(what + " (line " + std::to_string(line_) + ", column " + std::to_string(col_) + ")"),
        line(line_),
        col(col_) {}
  std::size_t line;
  std::size_t col;
};

}  // namespace knotgt
