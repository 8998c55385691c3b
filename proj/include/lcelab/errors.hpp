#pragma once

#include <stdexcept>
#include <string>

namespace lcelab {

/// Root of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the operation (non-dyadic, out of [0,1), ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A witness, gallery entry or command-line value is malformed.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// An approximation reached (or passed) its limit, so a gap is not positive.
class DegenerateApproximation : public Error {
 public:
  using Error::Error;
};

/// A caller-supplied function broke a stated precondition (monotonicity, n <= f(n), ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A bounded index search ran out of room.
class SearchExhausted : public Error {
 public:
  using Error::Error;
};

/// No positive gap alpha - f(0.sigma) exists at the requested level.
class WitnessDegenerate : public Error {
 public:
  using Error::Error;
};

/// A structural invariant does not hold (prefix-freeness, Kraft bound, ...).
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace lcelab
