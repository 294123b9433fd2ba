#pragma once

#include <stdexcept>
#include <string>

namespace polystab {

// Malformed or inconsistent user input (dimension mismatch, bad entry, ...).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A point lies outside the unit ball where a boundary/interior point is required.
class OutsideBallError : public InputError {
 public:
  using InputError::InputError;
};

// A face pattern has no point realizing it.
class InfeasibleError : public InputError {
 public:
  using InputError::InputError;
};

// An operation was called on data violating its documented precondition,
// e.g. a matrix that does not leave the ball invariant.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A tightness construction failed its own post-hoc verification.
class ConstructionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Something that a proven bound rules out was observed.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// The brute-force oracle refused to run because the search exceeds its budget.
class BudgetExceededError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace polystab
