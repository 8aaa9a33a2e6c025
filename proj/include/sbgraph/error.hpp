#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sbgraph {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid input to graph construction (out-of-range endpoint, self-loop).
class GraphError : public Error {
 public:
  using Error::Error;
};

// An operation was called on an input outside its domain. `reason()` is a
// stable machine-readable token such as "not_strongly_connected".
class PreconditionError : public Error {
 public:
  PreconditionError(std::string reason, const std::string& message)
      : Error(message), reason_(std::move(reason)) {}

  const std::string& reason() const noexcept { return reason_; }

 private:
  std::string reason_;
};

// Line 0 means the input as a whole (e.g. an unreadable file).
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error(line ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// A state the algorithms prove impossible was reached.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace sbgraph
