#pragma once

#include <numbers>
#include <stdexcept>
#include <string>

namespace stirep {

inline constexpr double kPi = std::numbers::pi;

// Raised when an input lies outside an operation's domain (bad parameters,
// undefined mixing angle, mismatched grids).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Raised when a computation produces non-finite values or an integrator
// cannot meet its tolerance.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace stirep
