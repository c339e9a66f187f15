#pragma once

#include <stdexcept>
#include <string>

namespace zsalg {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed user input: group specs, table files, CLI arguments.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A group closure or ingestion exceeded the configured element cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// An operation needing the Jacobson radical was called on an algebra
/// constructed without one.
class RadicalNotSupplied : public Error {
 public:
  RadicalNotSupplied() : Error("radical not supplied") {}
};

/// A proven structural fact failed to hold. Always a bug, never bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace zsalg
