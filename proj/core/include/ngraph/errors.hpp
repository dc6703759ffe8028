#pragma once

#include <stdexcept>
#include <string>

namespace ngraph {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A modular system failed validation (bad modulus, bad element, residue clash).
class InvalidSystem : public Error {
 public:
  using Error::Error;
};

/// The integer is not of the form u*m + s with u >= 0 and s in S.
class NotInA : public Error {
 public:
  using Error::Error;
};

/// An operation was called on a system that does not satisfy its predicate.
class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

/// An exact count left the range of the native integer type.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// A structural invariant that the identities guarantee was observed broken.
class InternalInvariantViolated : public Error {
 public:
  using Error::Error;
};

/// Fiber reconstruction produced something that is not a preimage of its target.
class ReconstructionFailed : public Error {
 public:
  using Error::Error;
};

}  // namespace ngraph
