#pragma once

#include <stdexcept>
#include <string>

namespace unibound {

/// Malformed or invariant-violating input (bad distribution, bad flags).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A bound was requested outside the parameter range where it is proved.
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Odd moment order with negative support: the factor g(x) is not sign-definite there.
class UnsupportedRegimeError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class ConstraintInfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Numerical self-check failed (division remainder too large).
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The quotient g(x) went negative on the check grid.
class NonnegativityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DegenerateWitnessError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace unibound
