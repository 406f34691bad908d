#ifndef MSTANLEY_ERRORS_HPP
#define MSTANLEY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mstanley {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands from different rings, malformed inputs, unsupported parameters.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A search or enumeration would exceed its configured budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// A mathematical invariant that must hold did not. Always a defect.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace mstanley

#endif  // MSTANLEY_ERRORS_HPP
