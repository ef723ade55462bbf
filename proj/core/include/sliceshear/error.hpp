#pragma once

#include <stdexcept>
#include <string>

namespace sliceshear {

/// Broad classification of failures. Maps one-to-one onto CLI exit codes.
enum class ErrorKind {
  usage,     ///< bad invocation (exit 1)
  parse,     ///< malformed input text (exit 2)
  semantic,  ///< well-formed input violating a mathematical rule (exit 3)
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Precondition or invariant violation inside the algebra (out-of-range
/// subgroup index, level mismatch, integer overflow, ...).
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& message)
      : Error(ErrorKind::semantic, message) {}
};

/// Syntax error with a 1-based source position. `line == 0` means the
/// position is unknown (e.g. an error inside a JSON path).
class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line, int column);

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  int line_;
  int column_;
  std::string detail_;
};

/// Input that parses but violates a named rule (unknown basis index,
/// bidegree-invalid differential, ...).
class SemanticError : public Error {
 public:
  SemanticError(std::string rule, const std::string& message);

  const std::string& rule() const noexcept { return rule_; }

 private:
  std::string rule_;
};

}  // namespace sliceshear
