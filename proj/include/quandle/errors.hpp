#pragma once

#include <stdexcept>
#include <string>

namespace qf {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed structure: index out of range, table that is not a group, bad JSON.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// A configured size bound was exceeded.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its precondition.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

/// Unknown group name, automorphism name, or catalog entry.
class LookupError : public Error {
 public:
  using Error::Error;
};

/// Two computations that must agree did not. Signals a bug, never bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

/// Two isomorphism deciders returned different verdicts on the same pair.
class DeciderDisagreement : public InternalError {
 public:
  using InternalError::InternalError;
};

}  // namespace qf
