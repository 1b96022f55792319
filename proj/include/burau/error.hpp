#pragma once

#include <stdexcept>
#include <string>

namespace burau {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (braid words, scalars). Carries the offending
/// character offset when known.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// An operation was called outside its domain: wrong strand count, zero
/// specialization, mismatched quadratic fields, non-elliptic input, ...
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A computed certificate contradicted an expected mathematical fact.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace burau
