#pragma once

#include <stdexcept>
#include <string>

namespace genuskit {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed textual input (rationals, potential files, option values).
class ParseError : public Error {
 public:
  using Error::Error;
};

// A documented precondition does not hold for the given arguments.
class DomainError : public Error {
 public:
  using Error::Error;
};

// An identity that must hold by construction failed; indicates a bug.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

// A truncated object was asked for information beyond its cap.
class TruncationError : public Error {
 public:
  using Error::Error;
};

// High-precision numerics could not meet the requested accuracy.
class NumericError : public Error {
 public:
  using Error::Error;
};

}  // namespace genuskit
