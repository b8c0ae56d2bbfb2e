#pragma once

#include <stdexcept>
#include <string>

namespace pairgraph {

/// Base for every error raised by the library. `exit_code()` is the process
/// exit status the command-line tool reports for this error class.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual int exit_code() const noexcept { return 2; }
};

/// Bad user input: malformed descriptors, elements out of range, violated
/// preconditions.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class SizeCapError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// S ∩ H is not closed under inversion.
class SymmetryViolation : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class IdentityInSet : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class NotClosedError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class NotRegularError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class NotConnectedError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class NonConvergenceError : public Error {
 public:
  using Error::Error;
  int exit_code() const noexcept override { return 3; }
};

}  // namespace pairgraph
