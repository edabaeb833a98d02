#pragma once

#include <stdexcept>
#include <string>

namespace oscul {

/// Base for every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A documented precondition of an operation was not met.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Two operands live in different rings.
class ContextMismatch : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// A partition does not fit the Grassmannian box.
class ShapeOverflow : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Parameters outside the range where the requested locus is defined.
class RangeError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Torus weights that make a localization denominator or weight vanish.
class DegenerateWeights : public Error {
 public:
  using Error::Error;
};

/// Inconsistent geometric input (for example a point not on the given line).
class GeometricError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// A size guard refused an instance.
class BudgetExceeded : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

}  // namespace oscul
