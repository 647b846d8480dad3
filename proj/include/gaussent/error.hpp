#pragma once

#include <stdexcept>
#include <string>

namespace gaussent {

enum class ErrorCode {
  kInvalidArgument,
  kUnphysicalState,
  kPairingFailure,
  kDomainError,
  kIndexOutOfRange,
  kNoSolution,
  kNoInversion,
  kDegenerateRegion,
  kOutOfRange,
  kSamplingExhausted,
  kParseError,
  kIoError,
};

/// Machine-readable snake_case name, e.g. "unphysical".
const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace gaussent
