#pragma once

#include <stdexcept>
#include <string>

namespace surfcc {

// Input that fails to parse or reference resolution.  CLI exit code 2.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Caller violated a documented precondition.  CLI exit code 3.
struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Broken internal invariant.  CLI exit code 4.
struct InternalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw PreconditionError(msg);
}

inline void check_internal(bool cond, const std::string& msg) {
  if (!cond) throw InternalError(msg);
}

}  // namespace surfcc
