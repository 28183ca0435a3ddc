#pragma once

#include <stdexcept>
#include <string>

namespace wred {

// Mirrors the wred_status codes of the C API (see wred.h).
enum class ErrorCode {
  InvalidArgument = 1,
  Parse = 2,
  InvalidDimension = 3,
  BadTriple = 4,
  BadGrading = 5,
  NotIsotropic = 6,
  ACondition = 7,
  DegenerateForm = 8,
  NoFiniteOrderInverse = 9,
  ShapeMismatch = 10,
  UnknownExample = 11,
  Internal = 12,
};

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace wred
