#pragma once

#include <stdexcept>

namespace optdom {

/// Evaluation point outside the open unit disc.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A reciprocal or a long division met a (numerically) vanishing value.
class SingularityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called outside its documented precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Adaptive quadrature hit its refinement limit.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual or JSON input.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace optdom
