#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>

#include "gaussent/covariance.hpp"
#include "gaussent/extremal.hpp"
#include "gaussent/multimode.hpp"
#include "gaussent/two_mode.hpp"

namespace gaussent {

struct SamplerConfig {
  std::uint64_t seed = 0;
  double mu_floor = 0.05;
  std::optional<EntanglementRegion> region_filter;
};

inline constexpr int kMaxRejections = 1'000'000;

/// Seeded generator of physical states. Samples are uniform in the
/// invariant coordinates, not in any state-space measure. One instance is
/// not safe to share between threads; derive seeds for parallel use.
class Sampler {
 public:
  explicit Sampler(SamplerConfig config);

  const SamplerConfig& config() const noexcept { return config_; }

  /// Uniform on [lo, hi), from the top 53 bits of the engine output.
  double uniform(double lo, double hi);

  /// mu1, mu2 ~ U[mu_floor, 1]; mu ~ U over the allowed global purities;
  /// delta ~ U over the attainable seralian interval. Rejects until the
  /// region filter matches; throws Error(kSamplingExhausted) after
  /// kMaxRejections attempts.
  TwoModeInvariants two_mode_invariants();

  /// Block standard-form parameters of a physical 1xN symmetric state. When
  /// a region filter is set it applies to the equivalent two-mode purities.
  SymmetricMultimodeParams symmetric_multimode(int n);

  /// Product of `layers` rounds of random phase rotations, two-mode and
  /// single-mode squeezers.
  Matrix random_symplectic(int n_modes, int layers = 10);

  /// S diag(nu1, nu1, ..., nuN, nuN) S^T with S = random_symplectic.
  CovarianceMatrix cm_with_spectrum(std::span<const double> spectrum,
                                    int layers = 10);

  /// Random spectrum in [1, max_nu] pushed through cm_with_spectrum.
  CovarianceMatrix physical_cm(int n_modes, double max_nu = 3.0);

 private:
  SymmetricMultimodeParams draw_symmetric(int n);

  SamplerConfig config_;
  std::mt19937_64 engine_;
};

/// Sweeps the seralian uniformly over its attainable interval at fixed
/// purities (`grid` points) and returns the extreme two-mode negativities.
/// Test oracle for the closed-form bounds.
NegativityBounds brute_force_negativity_bounds(double mu1, double mu2, double mu,
                                               int grid = 10000);

}  // namespace gaussent
