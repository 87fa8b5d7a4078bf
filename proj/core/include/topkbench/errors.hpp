#pragma once

#include <stdexcept>
#include <string>

namespace topkbench {

/// Input data violates an invariant (bad record, bad query spec, bad binding).
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Textual input could not be parsed; the message carries the location.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Filesystem-level failure (open, read, write).
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A term was looked up in statistics that do not contain it.
struct AbsentTermError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An execution strategy was requested that the target layout cannot run.
struct UnsupportedStrategyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace topkbench
