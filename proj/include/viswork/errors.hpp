#pragma once

#include <stdexcept>
#include <string>

namespace viswork {

enum class ErrorCode {
  NotSimple,
  NotCCW,
  ViewpointOutside,
  DegenerateInput,
  InvalidQuery,
  OverlapDegenerate,
  ChainNotIndependent,
  OffsetOutside,
  ParseError,
  InternalError,
};

const char* error_code_name(ErrorCode code);

// All failures carry a code (stable, machine-checkable) and a message naming the
// violated assumption.
class VisworkError : public std::runtime_error {
 public:
  VisworkError(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw VisworkError(code, message);
}

}  // namespace viswork
