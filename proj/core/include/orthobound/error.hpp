#pragma once

#include <stdexcept>
#include <string>

namespace orthobound {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the mathematical domain of an operation
/// (alpha >= 1, p <= 1/2, epsilon out of range, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An input violates a documented precondition that is checked
/// numerically (orthonormality, class membership, grid mismatch, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A numerical construction could not reach its accuracy target.
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace orthobound
