#pragma once

#include <stdexcept>
#include <string>

namespace tristring {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (vertex out of range, n = 0, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A rotation system is not well formed (neighbour missing, duplicated, or asymmetric).
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// Contraction of a non-contractible edge.
class ContractionError : public Error {
 public:
  using Error::Error;
};

/// Exponential-recursion guard tripped (Tutte edge limit).
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

/// Malformed text input. Carries the 1-based line number when known.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// A seed catalog failed verification.
class CatalogError : public Error {
 public:
  using Error::Error;
};

/// An operation that requires a valid triangulation received one that fails validation.
class InvalidTriangulation : public Error {
 public:
  using Error::Error;
};

}  // namespace tristring
