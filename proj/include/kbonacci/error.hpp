#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kbonacci {

/// Base of every error raised by the library. The CLI maps these to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An order, index or range outside the domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A coefficient cell (i, j) requested with i > j.
class OrderingError : public Error {
 public:
  using Error::Error;
};

/// A sequence window or b-file that does not reach far enough.
class CoverageError : public Error {
 public:
  using Error::Error;
};

/// Structurally valid lines that violate the b-file format (gaps in indices).
class FormatError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace kbonacci
