#pragma once

#include <stdexcept>

namespace llf {

// Error categories map onto the CLI exit codes: 1 = I/O, 2 = validation,
// 3 = broken internal invariant.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InternalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace llf
