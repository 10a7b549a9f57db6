#pragma once

#include <stdexcept>
#include <string>

namespace extlie {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Arithmetic outside the domain of an operation (division by zero, f_x at 0).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Operands from different coefficient fields.
class FieldMismatch : public Error {
 public:
  using Error::Error;
};

/// Dimension or ambient-space mismatch.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// The requested computation is not supported for this input (field too
/// large, characteristic 2 or 3, unknown builtin).
class CapabilityError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold for the input.
class HypothesisError : public Error {
 public:
  using Error::Error;
};

/// Something that is provably impossible under the operation's hypotheses
/// happened; the algebra data is corrupt.
class ContradictionError : public Error {
 public:
  using Error::Error;
};

/// A subspace that was required to be invariant under an action is not.
class InvarianceError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input (algebra files, expressions, certificate scripts).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}
  explicit ParseError(const std::string& what) : Error(what) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_ = 0;
};

}  // namespace extlie
