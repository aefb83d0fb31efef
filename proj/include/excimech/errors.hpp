#pragma once

#include <stdexcept>
#include <string>

namespace excimech {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid physical parameters (non-positive rate, conflicting variants, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Argument outside an operation's domain (negative power, equal modes, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Linear-algebra failure: eigensolver non-convergence, residual out of
// bounds, dual-route disagreement. Must never be silently swallowed.
class NumericalError : public Error {
 public:
  using Error::Error;
};

// Lyapunov solve requested for a drift matrix that is not Hurwitz-stable.
class StabilityError : public Error {
 public:
  using Error::Error;
};

// Malformed configuration file or unknown key.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Bad CLI invocation (unknown scenario, heatmap of a 1D grid, ...).
class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace excimech
