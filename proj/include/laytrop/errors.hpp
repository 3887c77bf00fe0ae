#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace laytrop {

/// Base of all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation applied outside its algebraic domain (flavor mismatch, zero series, bad arity...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A transition map asked to lower a layer.
class OrderError : public Error {
 public:
  using Error::Error;
};

/// Harness input that contradicts its own claims (e.g. a "root" that is not a root).
class OracleViolation : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace laytrop
