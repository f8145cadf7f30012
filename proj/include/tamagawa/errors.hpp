#pragma once

#include <stdexcept>
#include <string>

namespace tamagawa {

/// Base of every error raised by the library. Each subclass maps to one
/// process exit code in the command line tool.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual int exit_code() const noexcept = 0;
};

/// Malformed or mathematically inadmissible input (bad Dynkin type,
/// invalid curve, bad config).
class InvalidInput : public Error {
 public:
  using Error::Error;
  int exit_code() const noexcept override { return 1; }
};

/// An internal cross-check between two independent computations failed.
class InvariantViolation : public Error {
 public:
  using Error::Error;
  int exit_code() const noexcept override { return 2; }
};

/// A computation would exceed its configured size bound.
class ResourceLimit : public Error {
 public:
  using Error::Error;
  int exit_code() const noexcept override { return 3; }
};

}  // namespace tamagawa
