#pragma once

#include <stdexcept>
#include <string>

namespace clasp {

/// Raised for malformed input (braid text, PD text, bad arguments).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an internal consistency check fails (d^2 != 0, an sl2
/// character that does not decompose, an iteration cap, ...). Seeing one of
/// these means a bug, not bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace clasp
