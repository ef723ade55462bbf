#include "sliceshear/error.hpp"

namespace sliceshear {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::usage:
      return "usage";
    case ErrorKind::parse:
      return "parse";
    case ErrorKind::semantic:
      return "semantic";
  }
  return "unknown";
}

namespace {

std::string with_position(const std::string& message, int line, int column) {
  if (line <= 0) return message;
  return std::to_string(line) + ":" + std::to_string(column) + ": " + message;
}

}  // namespace

ParseError::ParseError(const std::string& message, int line, int column)
    : Error(ErrorKind::parse, with_position(message, line, column)),
      line_(line),
      column_(column),
      detail_(message) {}

SemanticError::SemanticError(std::string rule, const std::string& message)
    : Error(ErrorKind::semantic, rule + ": " + message), rule_(std::move(rule)) {}

}  // namespace sliceshear
