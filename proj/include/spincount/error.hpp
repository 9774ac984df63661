#pragma once

#include <stdexcept>
#include <string>

namespace spincount {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input: bad literals, arity mismatches,
/// violated preconditions. The CLI maps these to exit code 2.
class InputError : public Error {
 public:
  using Error::Error;
};

class ArityError : public InputError {
 public:
  using InputError::InputError;
};

/// An operation was called on an input outside its stated domain.
class PreconditionError : public InputError {
 public:
  using InputError::InputError;
};

/// A configured size cap was exceeded. The CLI maps these to exit code 3.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// A constructed object failed its own postcondition check. Indicates a bug.
class VerificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace spincount
