#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sdn {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand lengths or widths do not agree.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A length is outside the supported range (or has the wrong parity).
class LengthError : public Error {
 public:
  using Error::Error;
};

/// A value lies outside the domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A generator matrix failed self-duality validation.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class RankError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// Raised when a vector with <x,x> = 1 is used to build a neighbor.
class SelfOrthogonalityError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// Raised when the neighbor vector already lies in the code.
class TrivialNeighborError : public Error {
 public:
  using Error::Error;
};

class UnsupportedLengthError : public Error {
 public:
  using Error::Error;
};

class SearchError : public Error {
 public:
  using Error::Error;
};

/// Text input could not be parsed. Line and column are 1-based; 0 means
/// "not applicable".
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : Error(format(what, line, column)), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& what, std::size_t line, std::size_t column) {
    if (line == 0) return what;
    std::string out = "line " + std::to_string(line);
    if (column != 0) out += ", column " + std::to_string(column);
    return out + ": " + what;
  }

  std::size_t line_;
  std::size_t column_;
};

}  // namespace sdn
