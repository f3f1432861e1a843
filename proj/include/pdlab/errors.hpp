#pragma once

#include <stdexcept>
#include <string>

namespace pdlab {

/// Base of every error raised by the library. Callers that only need to
/// distinguish "bad input" from everything else can catch this.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidParameter : public Error {
 public:
  using Error::Error;
};

class InvalidMeasure : public Error {
 public:
  using Error::Error;
};

class LengthMismatch : public Error {
 public:
  using Error::Error;
};

/// Raised when a matrix entry or function value is NaN or infinite.
class EvaluationError : public Error {
 public:
  using Error::Error;
};

/// Inequality requires a real-valued function.
class NotRealError : public Error {
 public:
  using Error::Error;
};

/// Inequality is stated for u(0) = 1 and the function is not normalized.
class NormalizationError : public Error {
 public:
  using Error::Error;
};

/// The quasi-period hypothesis f(T) = alpha f(0) does not hold.
class HypothesisNotMet : public Error {
 public:
  using Error::Error;
};

class UnknownInequality : public Error {
 public:
  using Error::Error;
};

}  // namespace pdlab
