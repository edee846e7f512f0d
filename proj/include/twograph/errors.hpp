#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace twograph {

// Base class for all workbench errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input text: theta-spec files, element expressions.
struct ParseError : Error {
  ParseError(const std::string& msg, std::size_t line, std::size_t column)
      : Error(msg + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line(line),
        column(column) {}

  std::size_t line;
  std::size_t column;
};

// A documented precondition of an operation was violated.
struct PreconditionError : Error {
  using Error::Error;
};

}  // namespace twograph
