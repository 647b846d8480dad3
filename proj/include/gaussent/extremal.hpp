#pragma once

#include "gaussent/two_mode.hpp"

namespace gaussent {

enum class EntanglementRegion { kUnphysical, kSeparable, kCoexistence, kEntangled };

/// "unphysical", "separable", "coexistence" or "entangled".
const char* region_name(EntanglementRegion region) noexcept;

/// Global-purity thresholds at fixed marginals, in increasing order:
/// product states, separable edge, coexistence edge, maximal purity.
struct RegionThresholds {
  double product = 0.0;
  double separable = 0.0;
  double coexistence = 0.0;
  double gmemms = 0.0;
};

struct EntanglementClass {
  EntanglementRegion tag = EntanglementRegion::kUnphysical;
  RegionThresholds thresholds;
};

struct SqueezedThermalParams {
  double nu_minus = 1.0;
  double nu_plus = 1.0;
  double r = 0.0;
  /// True when mu1 < mu2: the squeezed thermal form assigns the purer mode
  /// to the first slot, so a and b were exchanged afterwards.
  bool modes_swapped = false;
};

struct GmemsState {
  StandardForm form;
  SqueezedThermalParams params;
};

struct NegativityBounds {
  double e_min = 0.0;
  double e_max = 0.0;
};

struct AverageNegativity {
  double mean = 0.0;
  double relative_error = 0.0;
};

RegionThresholds region_thresholds(double mu1, double mu2);

/// Places mu against the thresholds with closed upper edges for the
/// separable and coexistence bands. Never throws.
EntanglementClass classify(double mu1, double mu2, double mu);

/// Two-mode squeezed thermal state with spectrum (nu_minus, nu_plus) and
/// squeezing r: a = nu- cosh^2 r + nu+ sinh^2 r, b = nu- sinh^2 r +
/// nu+ cosh^2 r, c+- = +-(nu- + nu+)/2 sinh 2r.
StandardForm squeezed_thermal_form(double nu_minus, double nu_plus, double r);

/// Maximally entangled state at fixed global and local purities (lowest
/// seralian). Throws Error(kUnphysicalState) outside the physical range.
GmemsState gmems(double mu1, double mu2, double mu);

/// Least entangled state at fixed purities: delta = 1 + 1/mu^2, spectrum
/// (1, 1/mu). Such a state does not exist strictly inside the separable
/// band; there, and for unphysical purities, throws Error(kUnphysicalState).
StandardForm glems(double mu1, double mu2, double mu);

/// Closed-form E_min (GLEMS) and E_max (GMEMS), both clamped at zero and
/// identically zero in the separable band.
NegativityBounds negativity_bounds(double mu1, double mu2, double mu);

/// Mean of the bounds and (E_max - E_min)/(E_max + E_min). Throws
/// Error(kDegenerateRegion) when both bounds vanish.
AverageNegativity average_negativity(double mu1, double mu2, double mu);

/// Maximal global purity at fixed marginals; the seralian is pinned where
/// its lower and upper bounds meet.
TwoModeInvariants memms_frontier(double mu1, double mu2);

}  // namespace gaussent
