#pragma once

#include <stdexcept>
#include <string>

namespace fibrecheck {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two operands live in different rings.
class LayoutMismatch : public Error {
 public:
  using Error::Error;
};

// A precondition on an argument was violated (zero polynomial, bad index, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// The input is well formed but asks for something the checker does not support.
class UnsupportedInput : public Error {
 public:
  using Error::Error;
};

// A configured safety limit (pair count, wall clock) was hit.
class ResourceLimitError : public Error {
 public:
  ResourceLimitError(std::string limit, const std::string& what)
      : Error(what), limit_(std::move(limit)) {}

  // "pair-limit" or "timeout".
  const std::string& limit() const noexcept { return limit_; }

 private:
  std::string limit_;
};

// An internal post-condition failed; always a bug.
class SoundnessError : public Error {
 public:
  using Error::Error;
};

}  // namespace fibrecheck
