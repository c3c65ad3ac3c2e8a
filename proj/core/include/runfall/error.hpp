#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace runfall {

/// Base of every exception thrown by runfall.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller passed a parameter outside an operation's domain.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// An aggregation request mixes things that must never be aggregated,
/// for example several dimensions.
class ScopeError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// Input data is inconsistent: duplicate trials, empty groups, grids that
/// do not line up.
class DataError : public Error {
 public:
  using Error::Error;
};

/// Simulated restarts were requested on a group without any success. The
/// restart procedure would never stop.
class UndefinedRuntime : public DataError {
 public:
  using DataError::DataError;
};

/// Malformed run-log or table text. `line()` is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error(line == 0 ? message : "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace runfall
