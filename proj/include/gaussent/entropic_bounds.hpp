#pragma once

#include <span>
#include <vector>

#include "gaussent/entropy.hpp"
#include "gaussent/two_mode.hpp"

namespace gaussent {

/// Fixed global and marginal entropies of one family. Supported families:
/// kTsallis (p > 1), kLinear and kVonNeumann.
struct EntropicConstraint {
  EntropySpec measure{EntropyFamily::kTsallis, 2.0};
  double s_global = 0.0;
  double s1 = 0.0;
  double s2 = 0.0;
};

struct EntropicOptions {
  int bracket_cells = 512;   // mu scan resolution per root search
  int delta_points = 2000;   // seralian sweep resolution
  int nodal_scan_points = 64;
};

enum class ExtremalFamily { kGmemsEdge, kGlemsEdge, kInterior };

/// "gmems", "glems" or "interior".
const char* family_name(ExtremalFamily family) noexcept;

/// A point of the fixed-entropy curve in (mu, delta) coordinates.
struct EntropicPoint {
  double mu = 0.0;
  double delta = 0.0;
  double negativity = 0.0;
  double nu_tilde_minus = 1.0;
};

struct EntropicBounds {
  double e_min = 0.0;
  double e_max = 0.0;
  ExtremalFamily argmin_family = ExtremalFamily::kGmemsEdge;
  ExtremalFamily argmax_family = ExtremalFamily::kGmemsEdge;
  /// States on the lowest-seralian edge (squeezed thermal) and on the
  /// highest attainable seralian edge (partial minimum uncertainty).
  EntropicPoint gmems_edge;
  EntropicPoint glems_edge;
  double delta_min = 0.0;
  double delta_max = 0.0;
};

struct NodalPoint {
  double s_marginal = 0.0;
  bool found = false;      // false: no inversion over the attainable range
  double s_nodal = 0.0;
  double derivative = 0.0; // mean d nu~_-/d delta at s_nodal
};

/// Single-mode entropy of a mode with purity mu_i.
double single_mode_entropy(double mu_i, const EntropySpec& measure);

/// Supremum of the single-mode entropy (1/(p-1) for Tsallis, +inf for von
/// Neumann).
double single_mode_entropy_supremum(const EntropySpec& measure);

/// Inverts single_mode_entropy by bisection. Throws Error(kOutOfRange) for
/// unattainable s.
double marginal_purity_from_entropy(double s, const EntropySpec& measure);
double marginal_purity_from_entropy(double s, double p);

/// Global entropy of the two-mode state with purity mu and seralian delta.
double two_mode_entropy(double mu, double delta, const EntropySpec& measure);

/// All mu in the physical interval at this delta whose global entropy equals
/// the constraint. Throws Error(kNoSolution) when there is none.
std::vector<double> solve_mu_at_fixed_entropy(double delta,
                                              const EntropicConstraint& constraint,
                                              int bracket_cells = 512);

/// Extremal negativities over the fixed-entropy curve, swept in delta.
/// Throws Error(kNoSolution) when the constraint is not attainable.
EntropicBounds entropic_negativity_bounds(const EntropicConstraint& constraint,
                                          const EntropicOptions& options = {});

/// Mean of d nu~_-/d delta along the fixed-entropy curve, i.e. the slope
/// between its two edge states.
double mean_delta_derivative(const EntropicConstraint& constraint,
                             const EntropicOptions& options = {});

/// Attainable global-entropy interval for the given marginals.
struct EntropyRange {
  double lo = 0.0;
  double hi = 0.0;
};
EntropyRange attainable_global_entropy(double s1, double s2,
                                       const EntropySpec& measure,
                                       const EntropicOptions& options = {});

/// Global entropy at which the mean seralian derivative of nu~_- changes
/// sign, for symmetric marginal entropy `s_marginal`.
NodalPoint nodal_point(double s_marginal, const EntropySpec& measure,
                       const EntropicOptions& options = {});

std::vector<NodalPoint> nodal_surface(std::span<const double> s_marginal_grid,
                                      const EntropySpec& measure,
                                      const EntropicOptions& options = {});

}  // namespace gaussent
