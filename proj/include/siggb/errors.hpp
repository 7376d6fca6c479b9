#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace siggb {

// Operands from different ring contexts (e.g. monomials of different arity).
class ContextError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Exact division requested where the divisor does not divide.
class DivisionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace siggb
