#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hwiener {

// Malformed input text. Carries the 1-based line number of the offending line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Structurally invalid graph (loop, duplicate edge, label out of range).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A distance-based operation was asked to work on a disconnected graph.
class DisconnectedError : public std::runtime_error {
 public:
  DisconnectedError(int unreachable, const std::string& what)
      : std::runtime_error(what), unreachable_(unreachable) {}
  int unreachable_vertex() const noexcept { return unreachable_; }

 private:
  int unreachable_;
};

// Argument outside an operation's domain (n too small, r > n, bad weight...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Exact arithmetic was requested for a weight that is not integer-valued.
class ModeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Enumeration size above the configured cap.
class CapExceeded : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace hwiener
