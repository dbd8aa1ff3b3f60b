#pragma once

#include <stdexcept>
#include <string>

namespace anorm {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Operands have incompatible or unexpected shapes.
struct DimensionMismatch : Error {
  using Error::Error;
};

/// An iterative kernel hit its iteration cap before reaching tolerance.
struct ConvergenceFailure : Error {
  using Error::Error;
};

/// A matrix required to be positive semidefinite has an eigenvalue below
/// the accepted negative tolerance band.
struct NotPsd : Error {
  using Error::Error;
};

/// The operator does not admit an A-adjoint (range inclusion test failed).
struct NotInBA : Error {
  using Error::Error;
};

/// The operator is not A-bounded: it does not annihilate null(A) in the
/// A-seminorm, so compression to range(A) is meaningless.
struct NotABounded : Error {
  using Error::Error;
};

/// alpha outside the domain required by the requested quantity.
struct AlphaOutOfRange : Error {
  using Error::Error;
};

/// A theorem hypothesis (commutation, sharp-product identity, unitarity)
/// fails beyond tolerance for the supplied operands.
struct PreconditionUnmet : Error {
  using Error::Error;
};

/// Malformed matrix file.
struct ParseError : Error {
  using Error::Error;
};

/// Filesystem failure while reading or writing.
struct IoError : Error {
  using Error::Error;
};

}  // namespace anorm
