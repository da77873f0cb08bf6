#pragma once

#include <stdexcept>
#include <string>

namespace exceptia {

// Numeric values are part of the C ABI (see exceptia.h); do not renumber.
enum class ErrorCode : int {
  kOk = 0,
  kDivisionByZero = 1,
  kDomain = 2,        // precondition on a value violated
  kMismatch = 3,      // level / field / signature / dimension mismatch
  kParse = 4,
  kUnsupported = 5,   // value outside the supported set (e.g. Weyl vector dim)
  kInternal = 6,      // construction invariant broken
  kIo = 7,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

inline void require(bool cond, ErrorCode code, const char* what) {
  if (!cond) throw Error(code, what);
}

}  // namespace exceptia
