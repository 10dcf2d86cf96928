#pragma once

#include <stdexcept>
#include <string>

namespace dhpss {

// Argument outside the mathematical domain of an operation (bad alpha, omega,
// eps, interval ...). Maps to DHPSS_ERR_DOMAIN in the C interface.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

class IndexError : public std::out_of_range {
 public:
  explicit IndexError(const std::string& what) : std::out_of_range(what) {}
};

// A numerical invariant was violated (eigenvalue far outside [0,1],
// asymmetric input matrix, residual contract broken). Signals a bug rather
// than bad user input.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

class ConvergenceError : public NumericalError {
 public:
  explicit ConvergenceError(const std::string& what) : NumericalError(what) {}
};

}  // namespace dhpss
