#include "gaussent/two_mode.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "gaussent/error.hpp"

namespace gaussent {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double clamped_sqrt(double radicand, double scale, const char* what) {
  if (radicand >= 0.0) return std::sqrt(radicand);
  if (radicand >= -kInvariantTolerance * std::max(1.0, scale)) return 0.0;
  std::ostringstream msg;
  msg << what << " radicand is negative (" << radicand << ")";
  throw Error(ErrorCode::kUnphysicalState, msg.str());
}

BoundCheck check_between(double lower, double value, double upper,
                         double tol) {
  BoundCheck check{lower, value, upper, false};
  if (std::isnan(lower) || std::isnan(upper) || std::isnan(value)) {
    return check;
  }
  check.pass = value >= lower - tol * std::max(1.0, std::abs(lower)) &&
               value <= upper + tol * std::max(1.0, std::abs(upper));
  return check;
}

std::string describe_failures(const ValidationReport& report) {
  std::ostringstream msg;
  msg << "invariants violate physicality:";
  auto add = [&msg](const char* name, const BoundCheck& c) {
    if (!c.pass) {
      msg << ' ' << name << '=' << c.value << " not in [" << c.lower << ", "
          << c.upper << "];";
    }
  };
  add("mu1", report.mu1);
  add("mu2", report.mu2);
  add("mu", report.mu);
  add("delta", report.delta);
  add("delta(attainable)", report.delta_attainable);
  return msg.str();
}

void require_physical(const TwoModeInvariants& inv) {
  const ValidationReport report = validate_invariants(inv);
  if (!report.physical()) {
    throw Error(ErrorCode::kUnphysicalState, describe_failures(report));
  }
}

}  // namespace

CovarianceMatrix StandardForm::to_cm() const {
  Matrix m = Matrix::Zero(4, 4);
  m(0, 0) = a;
  m(1, 1) = a;
  m(2, 2) = b;
  m(3, 3) = b;
  m(0, 2) = m(2, 0) = c_plus;
  m(1, 3) = m(3, 1) = c_minus;
  return CovarianceMatrix(std::move(m));
}

double min_global_purity(double mu1, double mu2) { return mu1 * mu2; }

double max_global_purity(double mu1, double mu2) {
  const double prod = mu1 * mu2;
  return prod / (prod + std::abs(mu1 - mu2));
}

double seralian_lower_bound(double mu1, double mu2, double mu) {
  const double diff = (mu1 - mu2) / (mu1 * mu2);
  return 2.0 / mu + diff * diff;
}

double seralian_upper_bound(double mu) { return 1.0 + 1.0 / (mu * mu); }

double seralian_attainable_upper_bound(double mu1, double mu2, double mu) {
  const double sum = 1.0 / mu1 + 1.0 / mu2;
  return std::min(seralian_upper_bound(mu), sum * sum - 2.0 / mu);
}

ValidationReport validate_invariants(double mu1, double mu2, double mu,
                                     double delta, double tol) {
  ValidationReport report;
  report.mu1 = {0.0, mu1, 1.0, mu1 > 0.0 && mu1 <= 1.0 + tol};
  report.mu2 = {0.0, mu2, 1.0, mu2 > 0.0 && mu2 <= 1.0 + tol};

  const bool marginals_ok = mu1 > 0.0 && mu2 > 0.0;
  report.mu = check_between(marginals_ok ? min_global_purity(mu1, mu2) : kNaN,
                            mu,
                            marginals_ok ? max_global_purity(mu1, mu2) : kNaN,
                            tol);

  const bool global_ok = marginals_ok && mu > 0.0;
  const double lower = global_ok ? seralian_lower_bound(mu1, mu2, mu) : kNaN;
  report.delta = check_between(
      lower, delta, global_ok ? seralian_upper_bound(mu) : kNaN, tol);
  report.delta_attainable = check_between(
      lower, delta,
      global_ok ? seralian_attainable_upper_bound(mu1, mu2, mu) : kNaN, tol);
  return report;
}

ValidationReport validate_invariants(const TwoModeInvariants& inv,
                                     double tol) {
  return validate_invariants(inv.mu1, inv.mu2, inv.mu, inv.delta, tol);
}

TwoModeInvariants invariants_from_cm(const CovarianceMatrix& cm) {
  if (cm.n_modes() != 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "two-mode invariants need a 4x4 covariance matrix");
  }
  const double det_alpha = cm.block(0, 0).determinant();
  const double det_beta = cm.block(1, 1).determinant();
  const double det_gamma = cm.block(0, 1).determinant();
  const double det_sigma = cm.entries().determinant();
  if (!(det_alpha > 0.0) || !(det_beta > 0.0) || !(det_sigma > 0.0)) {
    throw Error(ErrorCode::kUnphysicalState,
                "covariance matrix has non-positive block determinants");
  }
  TwoModeInvariants inv;
  inv.mu1 = 1.0 / std::sqrt(det_alpha);
  inv.mu2 = 1.0 / std::sqrt(det_beta);
  inv.mu = 1.0 / std::sqrt(det_sigma);
  inv.delta = det_alpha + det_beta + 2.0 * det_gamma;
  require_physical(inv);
  return inv;
}

StandardForm standard_form_from_invariants(const TwoModeInvariants& inv) {
  require_physical(inv);
  const double prod = inv.mu1 * inv.mu2;
  const double diff_term = (inv.mu1 - inv.mu2) * (inv.mu1 - inv.mu2) / (prod * prod);
  const double sum_term = (inv.mu1 + inv.mu2) * (inv.mu1 + inv.mu2) / (prod * prod);
  const double purity_term = 4.0 / (inv.mu * inv.mu);

  const double shift_minus = inv.delta - diff_term;
  const double shift_plus = inv.delta - sum_term;
  const double eps_minus =
      clamped_sqrt(shift_minus * shift_minus - purity_term,
                   std::max(shift_minus * shift_minus, purity_term), "epsilon-");
  const double eps_plus =
      clamped_sqrt(shift_plus * shift_plus - purity_term,
                   std::max(shift_plus * shift_plus, purity_term), "epsilon+");

  const double scale = std::sqrt(prod) / 4.0;
  StandardForm sf;
  sf.a = 1.0 / inv.mu1;
  sf.b = 1.0 / inv.mu2;
  sf.c_plus = scale * (eps_minus + eps_plus);
  sf.c_minus = scale * (eps_minus - eps_plus);
  return sf;
}

SymplecticPair symplectic_eigs_from_invariants(double delta, double mu) {
  if (!(mu > 0.0) || !(delta > 0.0)) {
    throw Error(ErrorCode::kUnphysicalState,
                "seralian and purity must be positive");
  }
  const double purity_term = 4.0 / (mu * mu);
  const double root = clamped_sqrt(delta * delta - purity_term,
                                   std::max(delta * delta, purity_term),
                                   "symplectic eigenvalue");
  SymplecticPair pair;
  pair.nu_plus = std::sqrt(0.5 * (delta + root));
  // nu_- nu_+ = 1/mu
  pair.nu_minus = std::sqrt((2.0 / (mu * mu)) / (delta + root));
  return pair;
}

SymplecticPair ppt_symplectic_eigs(const TwoModeInvariants& inv) {
  require_physical(inv);
  const double delta_pt = -inv.delta + 2.0 / (inv.mu1 * inv.mu1) +
                          2.0 / (inv.mu2 * inv.mu2);
  return symplectic_eigs_from_invariants(delta_pt, inv.mu);
}

double two_mode_negativity(const TwoModeInvariants& inv) {
  return std::max(0.0, -std::log(ppt_symplectic_eigs(inv).nu_minus));
}

}  // namespace gaussent
