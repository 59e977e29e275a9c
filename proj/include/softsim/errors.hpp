#pragma once

#include <stdexcept>
#include <string>

namespace softsim {

/// Base of every error raised by the library. Domain errors (undefined values,
/// violated preconditions) derive from this directly; malformed input derives
/// from ParseError.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SpaceMismatchError : public Error {
 public:
  SpaceMismatchError()
      : Error("soft sets live in different soft spaces (universe or attribute lists differ)") {}
};

class EmptyIntersectionError : public Error {
 public:
  EmptyIntersectionError()
      : Error("restricted intersection needs overlapping attribute domains") {}
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class UndefinedMeasureError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Malformed files, identifiers and arguments.
class ParseError : public Error {
 public:
  using Error::Error;
};

class UnknownMeasureError : public ParseError {
 public:
  explicit UnknownMeasureError(const std::string& id)
      : ParseError("unknown measure identifier '" + id + "'") {}
};

}  // namespace softsim
