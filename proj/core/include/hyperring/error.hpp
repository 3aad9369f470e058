#pragma once

#include <stdexcept>
#include <string>

namespace hyperring {

/// Base class for every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed structure document, unknown element name, bad table entry.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its precondition (improper ideal, bad arity, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Input exceeds the engine's desk-scale bounds.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// A construction produced something that violates a structural invariant
/// (ill-defined quotient table, non-ideal radical, ...).
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace hyperring
