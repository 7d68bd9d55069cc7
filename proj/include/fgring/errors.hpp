#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fgring {

/// Polynomials or ideals living over different variable contexts were combined.
class ContextMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exact integer division failed (some coefficient is not divisible).
class NotDivisible : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A substitution did not cover every variable occurring in the polynomial.
class MissingAssignment : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured step or size limit was hit. Never a wrong answer, only a refusal.
class ResourceCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The minimal-prime pipeline met an ideal outside its supported class.
class DecompositionIncomplete : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A mechanically checked invariant failed. Indicates a bug, never user error.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Syntax error in a polynomial, presentation or formula, with position.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t offset, std::size_t line, std::size_t column)
      : std::runtime_error(message + " at line " + std::to_string(line) + ", column " +
                           std::to_string(column)),
        offset_(offset),
        line_(line),
        column_(column) {}

  std::size_t offset() const { return offset_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t offset_;
  std::size_t line_;
  std::size_t column_;
};

}  // namespace fgring
