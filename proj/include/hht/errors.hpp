#pragma once

#include <stdexcept>

namespace hht {

// Argument outside the mathematical domain of an operation (negative Fresnel
// argument, gamma pole, |lambda| >= sqrt(2), asymmetric phi, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A quadrature or series failed to reach its tolerance, or produced NaN.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed user input: unreadable or ill-formed CSV, bad grids.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace hht
