#pragma once

#include <string>
#include <string_view>

#include "gaussent/covariance.hpp"

namespace gaussent {

/// Parses {"n_modes": N, "matrix": [[...], ...]}. Throws Error(kParseError)
/// on malformed JSON or shape mismatch and Error(kInvalidArgument) on an
/// asymmetric matrix.
CovarianceMatrix parse_cm_json(std::string_view text);

/// Throws Error(kIoError) if the file cannot be read.
CovarianceMatrix load_cm_file(const std::string& path);

std::string cm_to_json(const CovarianceMatrix& cm);

}  // namespace gaussent
