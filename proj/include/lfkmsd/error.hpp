#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lfkmsd {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad caller input: out-of-range ids, invalid parameters, precondition breaches.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Malformed edge-list or cover text.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  [[nodiscard]] std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A broken internal invariant. Seeing one of these is a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace lfkmsd
