#pragma once

#include <stdexcept>
#include <string>

namespace heisbl {

/// Malformed or out-of-domain user input (maps to exit code 2).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computation would exceed its configured work budget (exit code 4).
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace heisbl
