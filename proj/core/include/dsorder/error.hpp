#pragma once

#include <stdexcept>
#include <string>

namespace dsorder {

/// Raised when an operation's precondition is not met (unknown process,
/// malformed biorder, cyclic input where acyclicity is required, ...).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by bounded searches when the caller's step budget runs out.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace dsorder
