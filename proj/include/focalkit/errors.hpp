#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace focalkit {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed request: bad shapes, unknown fixture ids, missing variables.
struct InputError : Error {
  using Error::Error;
};

struct ShapeError : InputError {
  using InputError::InputError;
};

// A randomly sampled configuration was degenerate and retries ran out.
struct NonGenericError : Error {
  using Error::Error;
};

// Every point of the fiber is focal; divisor-based operations do not apply.
struct FocalFiberError : Error {
  using Error::Error;
};

// The operation's hypothesis is not satisfied by this family (CLI exit 2).
struct InapplicableError : Error {
  using Error::Error;
};

struct ParseError : InputError {
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : InputError("parse error at " + std::to_string(line) + ":" +
                   std::to_string(column) + ": " + what),
        line(line),
        column(column) {}
  std::size_t line;
  std::size_t column;
};

}  // namespace focalkit
