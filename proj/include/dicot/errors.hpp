#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dicot {

/// Base of every error the engine reports for bad input.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exactly one side of a form was empty.
class DicotViolation : public Error {
 public:
  using Error::Error;
};

class UnknownId : public Error {
 public:
  using Error::Error;
};

class BoundExceeded : public Error {
 public:
  using Error::Error;
};

class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

/// Malformed game notation. `position()` is the 0-based byte offset of the
/// offending character in the parsed text.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& what)
      : Error("syntax error at position " + std::to_string(position) + ": " + what),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace dicot
