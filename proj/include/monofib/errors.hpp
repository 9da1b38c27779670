#pragma once

#include <stdexcept>
#include <string>

namespace monofib {

/// Malformed or inconsistent input: dimension mismatches, invalid curves, bad files.
struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A move whose precondition does not hold (e.g. no destabilizing generator).
struct NotApplicable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Request exceeds the desk-scale bounds of a search or closure routine.
struct CapacityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Operation is defined only for a subclass of inputs (e.g. disk bases).
struct Unsupported : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace monofib
