#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fsplit {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RingMismatch : public Error {
 public:
  RingMismatch() : Error("operands live in different rings") {}
};

class DegreeBoundExceeded : public Error {
 public:
  using Error::Error;
};

/// A precondition of an operation was violated by the caller.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class NotASplitting : public Error {
 public:
  using Error::Error;
};

/// Syntax or validation error in textual input; line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column),
        message_(what) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

}  // namespace fsplit
