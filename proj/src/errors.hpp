#pragma once

#include <stdexcept>
#include <string>

namespace asw {

enum class ErrorCode {
  InvalidArgument = 1,
  NonPrime,
  NonPositiveExponent,
  TrivialGroup,
  OutOfRange,
  NotIntermediate,
  NotProper,
  InvalidIndexVector,
  ResourceLimit,
  MismatchedCharacteristic,
  TruncationTooSmall,
  TruncationTooLarge,
  NonSquarefulConductor,
  InsufficientData,
  InternalCheckFailed,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& msg)
      : std::runtime_error(msg), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) {
  throw Error(code, msg);
}

// Internal consistency assertions that double as runtime checks of the
// algebraic identities the computation relies on.
inline void check(bool cond, const std::string& msg) {
  if (!cond) throw Error(ErrorCode::InternalCheckFailed, msg);
}

}  // namespace asw
