#pragma once

#include <stdexcept>
#include <string>

namespace zonocalc {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Mixed-mode arithmetic (exact op float) is rejected, never silently promoted.
struct ModeError : Error {
  using Error::Error;
};

struct DimensionError : Error {
  using Error::Error;
};

/// Enumeration / size caps exceeded (see config.hpp).
struct CapError : Error {
  using Error::Error;
};

/// Operation not defined on degenerate input (rank-deficient body, nested sets, ...).
struct DegenerateError : Error {
  using Error::Error;
};

/// Malformed external input (JSON, CLI flags). Maps to exit code 64.
struct InputError : Error {
  using Error::Error;
};

}  // namespace zonocalc
