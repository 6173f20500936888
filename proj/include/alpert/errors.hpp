#ifndef ALPERT_ERRORS_HPP
#define ALPERT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace alpert {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Two surds with different squarefree radicands cannot be added exactly.
// Callers on verification paths catch this and fall back to BigFloat.
struct IncompatibleRadicands : Error {
  using Error::Error;
};

struct NotPositiveDefinite : Error {
  using Error::Error;
};

struct SingularMatrix : Error {
  using Error::Error;
};

struct SingularMomentSystem : Error {
  using Error::Error;
};

struct DegreeTooHigh : Error {
  using Error::Error;
};

struct DomainError : Error {
  using Error::Error;
};

struct OddPowerEncountered : Error {
  using Error::Error;
};

struct NotProportional : Error {
  using Error::Error;
};

struct DenominatorPole : Error {
  using Error::Error;
};

struct NoConvergenceWithinBudget : Error {
  using Error::Error;
};

struct NonFactorableRow : Error {
  using Error::Error;
};

struct ShapeMismatch : Error {
  using Error::Error;
};

}  // namespace alpert

#endif
