#pragma once

#include <stdexcept>
#include <string>

namespace boolnet {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Raised by the network / state parsers. Positions are 1-based.
class ParseError : public Error {
public:
  ParseError(int line, int column, const std::string& message)
      : Error("parse error at " + std::to_string(line) + ":" +
              std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

private:
  int line_;
  int column_;
};

/// Raised when an analysis requires all attractors to be fixed points but a
/// cyclic attractor exists. The witness states are carried in the message.
class GuardViolation : public Error {
public:
  explicit GuardViolation(const std::string& what) : Error(what) {}
};

/// Raised when a configured resource cap is hit: network dimension above the
/// explicit-state limit, oracle dimension above the sweep limit, or the
/// simple-cycle enumeration budget exhausted before an answer was reached.
class CapExceeded : public Error {
public:
  explicit CapExceeded(const std::string& what) : Error(what) {}
};

}  // namespace boolnet
