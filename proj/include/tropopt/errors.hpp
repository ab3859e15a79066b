#pragma once

#include <stdexcept>
#include <string>

namespace tropopt {

/// Base class for all library errors. `condition()` is a short, stable
/// machine-readable name of the violated requirement (used by the CLI
/// diagnostics and by tests); `what()` carries the human-readable text.
class Error : public std::runtime_error {
 public:
  Error(std::string condition, const std::string& message)
      : std::runtime_error(message), condition_(std::move(condition)) {}
  explicit Error(const std::string& message) : Error(message, message) {}

  const std::string& condition() const noexcept { return condition_; }

 private:
  std::string condition_;
};

/// Integer overflow in exact rational arithmetic.
class OverflowError : public Error {
 public:
  explicit OverflowError(const std::string& message)
      : Error("rational overflow", message) {}
};

/// Multiplicative inverse of the semifield zero.
class InverseOfZero : public Error {
 public:
  InverseOfZero() : Error("inverse of zero", "the semifield zero has no multiplicative inverse") {}
};

/// A finite scalar value outside the semifield carrier.
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& message) : Error("carrier domain", message) {}
};

/// Operand shapes do not conform.
class ShapeMismatch : public Error {
 public:
  explicit ShapeMismatch(const std::string& message) : Error("shape mismatch", message) {}
};

/// Square-matrix operation applied to a rectangular matrix.
class NotSquare : public Error {
 public:
  explicit NotSquare(const std::string& message) : Error("not square", message) {}
};

/// Conjugate transposition of an all-zero matrix or vector.
class AllZeroMatrix : public Error {
 public:
  AllZeroMatrix() : Error("all-zero matrix", "conjugate transposition requires a nonzero operand") {}
};

/// Kleene star of a matrix with Tr(A) > 1.
class StarDiverges : public Error {
 public:
  StarDiverges() : Error("Tr(B) > 1", "Kleene star diverges: Tr(A) > 1") {}
};

/// Plus-closure of a matrix with Tr(A) != 1.
class TraceNotOne : public Error {
 public:
  TraceNotOne() : Error("Tr(C) != 1", "plus-closure requires Tr(A) = 1") {}
};

/// A solver regularity precondition failed. `condition()` names the offender.
class NotRegular : public Error {
 public:
  explicit NotRegular(const std::string& condition)
      : Error(condition, "regularity precondition failed: " + condition) {}
};

/// A feasibility condition failed; `condition()` carries the violated
/// inequality, e.g. "Tr(B) > 1" or "h-B*g > 1".
class Infeasible : public Error {
 public:
  explicit Infeasible(const std::string& condition)
      : Error(condition, "infeasible: " + condition) {}
};

/// Spectral radius is the semifield zero where a positive one is required.
class ZeroSpectralRadius : public Error {
 public:
  ZeroSpectralRadius() : Error("lambda = 0", "spectral radius is zero") {}
};

/// Box bounds g <= h violated.
class BoundsInverted : public Error {
 public:
  BoundsInverted() : Error("g > h", "box bounds inverted: g <= h required") {}
};

/// Trace-sum enumeration refused beyond the documented order bound.
class DimensionTooLarge : public Error {
 public:
  explicit DimensionTooLarge(const std::string& message)
      : Error("dimension too large", message) {}
};

/// No grid point satisfies the instance constraints.
class EmptyFeasibleGrid : public Error {
 public:
  EmptyFeasibleGrid() : Error("empty feasible grid", "no feasible point on the oracle grid") {}
};

/// A solution-set or optimality check failed; `condition()` holds the first
/// violated assertion.
class VerificationFailure : public Error {
 public:
  explicit VerificationFailure(const std::string& condition)
      : Error(condition, "verification failure: " + condition) {}
};

/// Malformed instance/report document.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& message) : Error("parse error", message) {}
};

}  // namespace tropopt
