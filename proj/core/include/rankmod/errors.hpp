#pragma once

#include <stdexcept>
#include <string>

namespace rankmod {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A value that is not a bijection on {1..n}.
class InvalidPermutation : public Error {
 public:
  using Error::Error;
};

/// A push-to-the-top index outside {2..n}.
class InvalidTransition : public Error {
 public:
  using Error::Error;
};

/// Two operands of different length.
class LengthMismatch : public Error {
 public:
  using Error::Error;
};

/// A construction or block was fed an input that violates its stated
/// shape. The message names the violated clause.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Request exceeds one of the hard size caps.
class SizeLimitError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Parsed data that fails verification.
class VerificationError : public Error {
 public:
  using Error::Error;
};

/// Internal consistency check failed; indicates a bug in a builder.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

}  // namespace rankmod
