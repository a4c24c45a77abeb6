#pragma once

#include <stdexcept>
#include <string>

namespace psiab {

// Argument outside the documented domain of an operation (|z| > 1, n = 0,
// misordered Janowski parameters, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input lies on a branch point or branch cut of a multivalued function.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Root finder was handed an interval without a sign change.
class BracketError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Adaptive quadrature ran out of subdivisions before meeting its tolerance.
class AccuracyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A numerical check that should hold by construction did not (no sign change
// where one is guaranteed, non-monotone margin, degenerate polygon, ...).
class InconsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace psiab
