#pragma once

#include <optional>

#include "gaussent/covariance.hpp"
#include "gaussent/extremal.hpp"
#include "gaussent/two_mode.hpp"

namespace gaussent {

/// A single mode alpha = diag(a1, a2) coupled to N identical modes
/// beta = b*I with intra-block correlations eps = diag(e1, e2) and
/// alpha-to-beta couplings gamma = diag(g1, g2). Modes are ordered alpha
/// first.
struct SymmetricMultimodeParams {
  double a1 = 1.0;
  double a2 = 1.0;
  double b = 1.0;
  double e1 = 0.0;
  double e2 = 0.0;
  double g1 = 0.0;
  double g2 = 0.0;
  int n = 1;
};

/// Williamson data of the symmetric N-mode block.
struct BlockSpectrum {
  double nu_minus = 1.0;   // (N-1)-fold degenerate
  double nu_plus_n = 1.0;  // nondegenerate, carries the collective mode
};

/// Two-mode state that carries the whole 1xN entanglement, plus the
/// decoupled remainder.
struct LocalizedState {
  TwoModeInvariants equivalent;
  double nu_minus_block = 1.0;
  int degeneracy = 0;  // N - 1
  double nu_plus_block = 1.0;
  double mu_alpha = 1.0;
  double mu_block = 1.0;  // purity of the symmetric N-mode block
  double mu_sigma = 1.0;  // global purity
  double delta_alpha = 2.0;
};

enum class NegativityMethod { kDirect, kLocalized, kEstimated };

struct EstimatedNegativity {
  EntanglementRegion region = EntanglementRegion::kUnphysical;
  NegativityBounds bounds;
  double mean = 0.0;
  /// Empty when both bounds vanish.
  std::optional<double> relative_error;
};

struct OneToNNegativity {
  NegativityMethod method = NegativityMethod::kDirect;
  double value = 0.0;  // E_N, or the average estimate for kEstimated
  std::optional<EstimatedNegativity> estimate;
};

/// Assembles the (2N+2)x(2N+2) matrix without checking physicality.
CovarianceMatrix assemble_symmetric_cm(const SymmetricMultimodeParams& params);

/// As assemble_symmetric_cm, but throws Error(kUnphysicalState) when the
/// result is not a physical covariance matrix.
CovarianceMatrix build_symmetric_cm(const SymmetricMultimodeParams& params);

/// nu- = sqrt((b-e1)(b-e2)), nu+^(N) = sqrt((b+(N-1)e1)(b+(N-1)e2)).
BlockSpectrum symmetric_block_spectrum(double b, double e1, double e2, int n);

/// Equivalent two-mode invariants of the 1xN split, from the block
/// parameters alone (no eigen-decomposition of the full matrix).
LocalizedState localize(const SymmetricMultimodeParams& params);

/// 1xN negativity by partial transposition of the full matrix.
double direct_negativity(const SymmetricMultimodeParams& params);

/// 1xN negativity of the equivalent two-mode state.
double localized_negativity(const SymmetricMultimodeParams& params);

/// Purity-only estimate: extremal bounds on the equivalent purities,
/// ignoring the equivalent seralian.
EstimatedNegativity estimated_negativity(const SymmetricMultimodeParams& params);

OneToNNegativity one_to_n_negativity(const SymmetricMultimodeParams& params,
                                     NegativityMethod method);

/// Negativity between alpha and K <= N of the symmetric modes, computed on
/// the reduced matrix.
double one_to_k_negativity(const SymmetricMultimodeParams& params, int k);

}  // namespace gaussent
