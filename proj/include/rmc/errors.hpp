#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rmc {

// Malformed input text. Positions are 1-based; col 0 means "whole line".
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line, int col)
      : std::runtime_error(message + " (line " + std::to_string(line) +
                           (col > 0 ? ", col " + std::to_string(col) : std::string()) + ")"),
        line_(line),
        col_(col) {}

  [[nodiscard]] int line() const noexcept { return line_; }
  [[nodiscard]] int col() const noexcept { return col_; }

 private:
  int line_;
  int col_;
};

// Structurally well-formed input that violates a semantic requirement
// (bad state index, unknown symbol, wrong block name, ...).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two operands whose alphabets must agree do not.
class AlphabetMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A word has the wrong length for the requested operation.
class LengthMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An exploration exceeded its state budget. Carries the operation name so
// callers can tell which stage gave up.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& op, std::size_t limit)
      : std::runtime_error(op + ": state budget of " + std::to_string(limit) + " exceeded"),
        op_(op),
        limit_(limit) {}

  [[nodiscard]] const std::string& op() const noexcept { return op_; }
  [[nodiscard]] std::size_t limit() const noexcept { return limit_; }

 private:
  std::string op_;
  std::size_t limit_;
};

}  // namespace rmc
