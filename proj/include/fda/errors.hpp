#pragma once

#include <stdexcept>
#include <string>

namespace fda {

// Raised when a config, scenario, axis, or design request violates one of the
// documented invariants.  The message always starts with the offending field
// or argument name.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when a scenario, weights, or output file cannot be read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fda
