#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace orbmeas {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input rejected by a precondition: bad dimensions, degenerate points,
/// syntax errors. The CLI maps these to exit code 1.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public ValidationError {
 public:
  DimensionMismatch(std::size_t expected, std::size_t got)
      : ValidationError("dimension mismatch: expected " + std::to_string(expected) +
                        ", got " + std::to_string(got)) {}
};

class DegreeOverflow : public ValidationError {
 public:
  explicit DegreeOverflow(int degree)
      : ValidationError("total degree " + std::to_string(degree) + " exceeds the cap") {}
};

class DomainError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class NotDivisible : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class SingularPoint : public ValidationError {
 public:
  SingularPoint() : ValidationError("singular point: discriminant vanishes") {}
};

class TraceNotZero : public ValidationError {
 public:
  TraceNotZero() : ValidationError("point must have zero coordinate sum (use --center)") {}
};

class NotAlternating : public ValidationError {
 public:
  NotAlternating() : ValidationError("polynomial is not alternating under the Weyl group") {}
};

class NotSymmetric : public ValidationError {
 public:
  NotSymmetric() : ValidationError("polynomial is not symmetric under the Weyl group") {}
};

class UnsupportedRootSystem : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class ParseError : public ValidationError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : ValidationError(what + " at position " + std::to_string(position)),
        position_(position) {}

  /// 1-based character offset into the source text.
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Numerical routine failed to meet its tolerance.
class NonConvergence : public Error {
 public:
  using Error::Error;
};

/// A runtime assertion on an internal invariant failed.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace orbmeas
