#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace bandperm {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Text or value sequence that is not a bijection of {1..n}. `index()` is the
/// 1-based position of the offending token (0 when the input is empty).
class MalformedPermutation : public Error {
 public:
  MalformedPermutation(const std::string& what, int index)
      : Error(what), index_(index) {}
  int index() const noexcept { return index_; }

 private:
  int index_;
};

/// Malformed swap set, sign profile, chain file or similar input.
class MalformedInput : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its documented domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Sizes of two operands disagree.
class SizeMismatch : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Request exceeds the sizes the exhaustive machinery supports.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// A consistency check inside the library failed. Always a bug or a
/// counterexample to a claimed identity.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace bandperm
