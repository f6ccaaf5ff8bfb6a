#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace closedgraph {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed textual input. line() is 1-based, 0 when not applicable.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line)
      : Error(line == 0 ? message
                        : "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// A precondition on the graph or labeling does not hold (disconnected input,
// unknown vertex, non-bijective labeling, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

class UnsupportedSize : public Error {
 public:
  using Error::Error;
};

// Input size exceeds what an exhaustive routine is allowed to attempt.
class GuardError : public Error {
 public:
  using Error::Error;
};

// A result failed its own certificate check. Indicates a bug, never bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

namespace detail {

inline void ensure(bool condition, const char* what) {
  if (!condition) throw InternalError(what);
}

}  // namespace detail
}  // namespace closedgraph
