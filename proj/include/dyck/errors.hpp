#pragma once

#include <stdexcept>
#include <string>

namespace dyck {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input (word tokens, rationals, class names).
class ParseError : public Error {
 public:
  using Error::Error;
};

class EmptyWord : public Error {
 public:
  EmptyWord() : Error("operation requires a nonempty word") {}
};

class NotPeriodicPoint : public Error {
 public:
  using Error::Error;
};

/// Projected or actual work exceeds the configured budget.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

class EmptyEnsemble : public Error {
 public:
  using Error::Error;
};

/// Collapsed word has no height drift of the required sign, so its periodic
/// extension is not in the embedded set.
class NoDrift : public Error {
 public:
  using Error::Error;
};

class MatchSearchExceeded : public Error {
 public:
  using Error::Error;
};

class NonHyperbolic : public Error {
 public:
  using Error::Error;
};

class ConstraintViolation : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace dyck
