#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace structctl {

/// Malformed pattern or state-space text. Carries the 1-based offending line.
class ParseError : public std::runtime_error {
 public:
  enum class Kind { syntax, duplicate_entry, out_of_range, negative_degree };

  ParseError(Kind kind, std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), kind_(kind), line_(line) {}

  Kind kind() const noexcept { return kind_; }
  std::size_t line() const noexcept { return line_; }

 private:
  Kind kind_;
  std::size_t line_;
};

/// A well-formed input that an operation's precondition rejects
/// (non-square matrix, unknown edge, zero term rank, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exponential test oracles refuse instances above their size guard.
class GuardError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace structctl
