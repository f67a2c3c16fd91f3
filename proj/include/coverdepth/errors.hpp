#pragma once

#include <stdexcept>
#include <string>

namespace coverdepth {

/// Malformed or inconsistent arguments (index out of range, ambient mismatch).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Arguments outside the mathematical domain of an operation
/// (non-squarefree dual, non-bipartite power construction, unit ideal invariants).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Exponent overflow or integer overflow in exact linear algebra.
class ArithmeticError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// A configured work cap (multidegree box, search nodes) was exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Text input that could not be parsed. Line and column are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line, int column)
      : std::runtime_error(what + " (line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace coverdepth
