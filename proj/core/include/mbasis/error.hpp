#pragma once

#include <stdexcept>
#include <string>

namespace mbasis {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed model, label, vector length, or other caller-side mistake.
class InputError : public Error {
 public:
  using Error::Error;
};

/// The configuration matrix has no grading, so fibers may be infinite.
class NoGradingError : public InputError {
 public:
  using InputError::InputError;
};

/// A 64-bit intermediate value left its representable range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// An enumeration would touch more monomials than the caller allowed.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Two routes that must agree did not. Always a bug.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace mbasis
