#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace oddtree {

enum class ErrorKind {
  LoopEdge,
  DuplicateEdge,
  VertexOutOfRange,
  ParseError,
  InvalidSpec,
  DimensionMismatch,
  DimensionTooLarge,
  DisconnectedGraph,
  InvalidParity,
  EnumerationCapExceeded,
  SizeGuard,
};

std::string_view to_string(ErrorKind kind);

// Every failure surfaced by the library carries one of the kinds above so
// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Parse failures remember the 1-based input line that triggered them.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error(ErrorKind::ParseError,
              "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace oddtree
