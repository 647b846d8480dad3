#pragma once

#include "gaussent/covariance.hpp"

namespace gaussent {

/// Local purities mu1, mu2, global purity mu and seralian delta of a
/// two-mode state. Together they fix the state up to local symplectics.
struct TwoModeInvariants {
  double mu1 = 1.0;
  double mu2 = 1.0;
  double mu = 1.0;
  double delta = 2.0;
};

/// Standard-form entries: diag blocks a*I, b*I, correlations diag(c+, c-).
/// Convention: c_plus >= |c_minus|, c_plus >= 0.
struct StandardForm {
  double a = 1.0;
  double b = 1.0;
  double c_plus = 0.0;
  double c_minus = 0.0;

  CovarianceMatrix to_cm() const;
};

struct SymplecticPair {
  double nu_minus = 1.0;
  double nu_plus = 1.0;
};

struct BoundCheck {
  double lower = 0.0;
  double value = 0.0;
  double upper = 0.0;
  bool pass = false;

  double lower_margin() const { return value - lower; }
  double upper_margin() const { return upper - value; }
};

/// Margins of every physicality condition on the four invariants.
///
/// `mu1`, `mu2`: 0 < mu_i <= 1. `mu`: mu1*mu2 <= mu <= mu1*mu2/(mu1*mu2 +
/// |mu1 - mu2|). `delta`: 2/mu + (mu1-mu2)^2/(mu1 mu2)^2 <= delta <= 1 +
/// 1/mu^2. `delta_attainable` additionally caps delta by
/// (1/mu1 + 1/mu2)^2 - 2/mu, the point where the standard-form correlations
/// stop being real; this cap only binds below the separable threshold.
struct ValidationReport {
  BoundCheck mu1;
  BoundCheck mu2;
  BoundCheck mu;
  BoundCheck delta;
  BoundCheck delta_attainable;

  bool physical() const {
    return mu1.pass && mu2.pass && mu.pass && delta.pass &&
           delta_attainable.pass;
  }
};

inline constexpr double kInvariantTolerance = 1e-9;

double min_global_purity(double mu1, double mu2);
double max_global_purity(double mu1, double mu2);
double seralian_lower_bound(double mu1, double mu2, double mu);
double seralian_upper_bound(double mu);
/// min(seralian_upper_bound, (1/mu1 + 1/mu2)^2 - 2/mu).
double seralian_attainable_upper_bound(double mu1, double mu2, double mu);

ValidationReport validate_invariants(double mu1, double mu2, double mu,
                                     double delta,
                                     double tol = kInvariantTolerance);
ValidationReport validate_invariants(const TwoModeInvariants& inv,
                                     double tol = kInvariantTolerance);

/// Throws Error(kInvalidArgument) for non-two-mode input and
/// Error(kUnphysicalState) when the invariants fail validation.
TwoModeInvariants invariants_from_cm(const CovarianceMatrix& cm);

/// Inverts the invariant map. Radicands within tolerance below zero are
/// clamped; anything more negative throws Error(kUnphysicalState).
StandardForm standard_form_from_invariants(const TwoModeInvariants& inv);

/// Symplectic eigenvalues from seralian and purity:
/// 2 nu^2 = delta -/+ sqrt(delta^2 - 4/mu^2).
SymplecticPair symplectic_eigs_from_invariants(double delta, double mu);

/// Partially transposed spectrum; the seralian becomes
/// -delta + 2/mu1^2 + 2/mu2^2.
SymplecticPair ppt_symplectic_eigs(const TwoModeInvariants& inv);

/// max(0, -ln nu~_-).
double two_mode_negativity(const TwoModeInvariants& inv);

}  // namespace gaussent
