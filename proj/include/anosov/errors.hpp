#pragma once

#include <stdexcept>
#include <string>

namespace anosov {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent user input (graph files, datum files, flags).
class InputError : public Error {
 public:
  using Error::Error;
};

/// A desk-scale cap (group order, subgroup count, basis size, class) was hit.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Raised when a witness is requested for a form the decider rejects.
class NotAnosovError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Component sizes outside the unit catalog (only degrees 2 and 3 exist).
class UnsupportedDegree : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed; always a bug, never bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace anosov
