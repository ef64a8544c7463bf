#pragma once

#include <stdexcept>

namespace virasoro {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rejected input: mismatched variable tags, malformed data, non-cocycle
/// arguments where a cocycle is required.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// An operation would have to read coefficients outside a window guarantee.
class WindowExhaustion : public Error {
 public:
  using Error::Error;
};

/// Cochain degree outside the supported range.
class UnsupportedDegree : public Error {
 public:
  using Error::Error;
};

/// Window too small for the requested solve to be meaningful.
class UnderDeterminedWindow : public Error {
 public:
  using Error::Error;
};

}  // namespace virasoro
