#pragma once

#include <stdexcept>
#include <string>

namespace homcurv {

/// Bad input: unknown label, invalid parameters, dimension mismatch.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computed object failed one of its invariants (equivariance, positivity, ...).
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace homcurv
