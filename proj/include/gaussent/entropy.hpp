#pragma once

#include <span>

#include "gaussent/covariance.hpp"

namespace gaussent {

enum class EntropyFamily { kPurity, kLinear, kTsallis, kRenyi, kVonNeumann };

struct EntropySpec {
  EntropyFamily family = EntropyFamily::kVonNeumann;
  double p = 2.0;  // used by kTsallis and kRenyi only, must be > 1
};

/// Per-mode factor of Tr rho^p: 2^p / ((x+1)^p - (x-1)^p).
/// Throws Error(kDomainError) for x < 1 or p <= 1. Values within 1e-9 below
/// 1 are treated as 1.
double g_p(double x, double p);

/// ((x+1)/2) ln((x+1)/2) - ((x-1)/2) ln((x-1)/2), zero at x = 1.
double von_neumann_term(double x);

// Spectrum-level forms. All logarithms are natural.

double trace_rho_p(std::span<const double> symplectic_eigs, double p);
double tsallis_from_spectrum(std::span<const double> symplectic_eigs, double p);
double renyi_from_spectrum(std::span<const double> symplectic_eigs, double p);
double von_neumann_from_spectrum(std::span<const double> symplectic_eigs);

// State-level forms.

/// 1 / sqrt(Det sigma).
double purity(const CovarianceMatrix& cm);
double linear_entropy(const CovarianceMatrix& cm);
double tsallis_entropy(const CovarianceMatrix& cm, double p);
double renyi_entropy(const CovarianceMatrix& cm, double p);
double von_neumann_entropy(const CovarianceMatrix& cm);

double entropy(const CovarianceMatrix& cm, const EntropySpec& spec);

}  // namespace gaussent

namespace gaussent {

/// Entropy of a spectrum under `spec`. kPurity returns Tr rho^2.
double entropy_from_spectrum(std::span<const double> symplectic_eigs,
                             const EntropySpec& spec);

}  // namespace gaussent
