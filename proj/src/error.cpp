#include "gaussent/error.hpp"

namespace gaussent {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid_argument";
    case ErrorCode::kUnphysicalState: return "unphysical";
    case ErrorCode::kPairingFailure: return "pairing_failure";
    case ErrorCode::kDomainError: return "domain_error";
    case ErrorCode::kIndexOutOfRange: return "index_out_of_range";
    case ErrorCode::kNoSolution: return "no_solution";
    case ErrorCode::kNoInversion: return "no_inversion";
    case ErrorCode::kDegenerateRegion: return "degenerate_region";
    case ErrorCode::kOutOfRange: return "out_of_range";
    case ErrorCode::kSamplingExhausted: return "sampling_exhausted";
    case ErrorCode::kParseError: return "parse_error";
    case ErrorCode::kIoError: return "io_error";
  }
  return "unknown";
}

}  // namespace gaussent
