#pragma once

#include <stdexcept>

namespace mpemba {

// Invalid parameters, states, or configuration. The CLI maps this to exit code 2.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Numerical failure (step-size underflow, positivity loss, ...). CLI exit code 3.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mpemba
