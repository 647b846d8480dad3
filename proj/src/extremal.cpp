#include "gaussent/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "gaussent/error.hpp"

namespace gaussent {

namespace {

constexpr double kBoundarySlack = 1e-12;

void require_not_unphysical(const EntanglementClass& cls, double mu1,
                            double mu2, double mu) {
  if (cls.tag == EntanglementRegion::kUnphysical) {
    std::ostringstream msg;
    msg << "purities (" << mu1 << ", " << mu2 << ", " << mu
        << ") are outside the physical range";
    throw Error(ErrorCode::kUnphysicalState, msg.str());
  }
}

}  // namespace

const char* region_name(EntanglementRegion region) noexcept {
  switch (region) {
    case EntanglementRegion::kUnphysical: return "unphysical";
    case EntanglementRegion::kSeparable: return "separable";
    case EntanglementRegion::kCoexistence: return "coexistence";
    case EntanglementRegion::kEntangled: return "entangled";
  }
  return "unknown";
}

RegionThresholds region_thresholds(double mu1, double mu2) {
  const double prod = mu1 * mu2;
  RegionThresholds t;
  t.product = prod;
  t.separable = prod / (mu1 + mu2 - prod);
  t.coexistence = prod / std::sqrt(mu1 * mu1 + mu2 * mu2 - prod * prod);
  t.gmemms = max_global_purity(mu1, mu2);
  return t;
}

EntanglementClass classify(double mu1, double mu2, double mu) {
  EntanglementClass cls;
  if (!(mu1 > 0.0 && mu1 <= 1.0 && mu2 > 0.0 && mu2 <= 1.0) ||
      !std::isfinite(mu)) {
    return cls;
  }
  cls.thresholds = region_thresholds(mu1, mu2);
  const RegionThresholds& t = cls.thresholds;
  if (mu < t.product * (1.0 - kBoundarySlack) ||
      mu > t.gmemms * (1.0 + kBoundarySlack)) {
    cls.tag = EntanglementRegion::kUnphysical;
  } else if (mu <= t.separable) {
    cls.tag = EntanglementRegion::kSeparable;
  } else if (mu <= t.coexistence) {
    cls.tag = EntanglementRegion::kCoexistence;
  } else {
    cls.tag = EntanglementRegion::kEntangled;
  }
  return cls;
}

StandardForm squeezed_thermal_form(double nu_minus, double nu_plus, double r) {
  const double ch2 = std::cosh(r) * std::cosh(r);
  const double sh2 = std::sinh(r) * std::sinh(r);
  const double corr = 0.5 * (nu_minus + nu_plus) * std::sinh(2.0 * r);
  StandardForm sf;
  sf.a = nu_minus * ch2 + nu_plus * sh2;
  sf.b = nu_minus * sh2 + nu_plus * ch2;
  sf.c_plus = corr;
  sf.c_minus = -corr;
  return sf;
}

GmemsState gmems(double mu1, double mu2, double mu) {
  require_not_unphysical(classify(mu1, mu2, mu), mu1, mu2, mu);
  const double prod = mu1 * mu2;
  const double mu_eff = std::max(mu, prod);

  const double tanh_2r =
      2.0 * std::sqrt(std::max(0.0, prod - prod * prod / mu_eff)) / (mu1 + mu2);
  if (!(tanh_2r < 1.0)) {
    throw Error(ErrorCode::kUnphysicalState, "squeezing diverges");
  }

  const double diff = std::abs(mu1 - mu2);
  const double diff_sq = diff * diff / (prod * prod);
  const double nu_plus_sq = 1.0 / mu_eff + 0.5 * diff_sq +
                            (diff / (2.0 * prod)) * std::sqrt(diff_sq + 4.0 / mu_eff);

  GmemsState state;
  state.params.r = 0.5 * std::atanh(tanh_2r);
  state.params.nu_plus = std::sqrt(nu_plus_sq);
  state.params.nu_minus = 1.0 / (mu_eff * state.params.nu_plus);
  state.form = squeezed_thermal_form(state.params.nu_minus,
                                     state.params.nu_plus, state.params.r);
  if (mu1 < mu2) {
    std::swap(state.form.a, state.form.b);
    state.params.modes_swapped = true;
  }
  return state;
}

StandardForm glems(double mu1, double mu2, double mu) {
  require_not_unphysical(classify(mu1, mu2, mu), mu1, mu2, mu);
  return standard_form_from_invariants({mu1, mu2, mu, seralian_upper_bound(mu)});
}

NegativityBounds negativity_bounds(double mu1, double mu2, double mu) {
  const EntanglementClass cls = classify(mu1, mu2, mu);
  require_not_unphysical(cls, mu1, mu2, mu);
  NegativityBounds bounds;
  if (cls.tag == EntanglementRegion::kSeparable) return bounds;

  const double sum = mu1 + mu2;
  const double prod_sq = mu1 * mu1 * mu2 * mu2;

  // E_max = -1/2 ln[-1/mu + (s/(2P))(s - sqrt(s^2 - 4P/mu))], inner
  // difference rationalized.
  const double inner_root = std::sqrt(std::max(0.0, sum * sum - 4.0 * prod_sq / mu));
  const double gmems_bracket = -1.0 / mu + (2.0 * sum / mu) / (sum + inner_root);
  bounds.e_max = std::max(0.0, -0.5 * std::log(gmems_bracket));

  // E_min = -1/2 ln[K - sqrt(K^2 - 1/mu^2)],
  // K = 1/mu1^2 + 1/mu2^2 - 1/(2 mu^2) - 1/2.
  const double k = 1.0 / (mu1 * mu1) + 1.0 / (mu2 * mu2) - 0.5 / (mu * mu) - 0.5;
  const double inv_mu_sq = 1.0 / (mu * mu);
  const double radicand = k * k - inv_mu_sq;
  if (radicand < -kInvariantTolerance * std::max(1.0, k * k) || !(k > 0.0)) {
    throw Error(ErrorCode::kUnphysicalState,
                "minimal-negativity bracket has no real root");
  }
  const double glems_bracket = inv_mu_sq / (k + std::sqrt(std::max(0.0, radicand)));
  bounds.e_min = std::clamp(-0.5 * std::log(glems_bracket), 0.0, bounds.e_max);
  return bounds;
}

AverageNegativity average_negativity(double mu1, double mu2, double mu) {
  const NegativityBounds b = negativity_bounds(mu1, mu2, mu);
  const double total = b.e_max + b.e_min;
  if (!(total > 0.0)) {
    throw Error(ErrorCode::kDegenerateRegion,
                "both negativity bounds vanish; relative error undefined");
  }
  return {0.5 * total, (b.e_max - b.e_min) / total};
}

TwoModeInvariants memms_frontier(double mu1, double mu2) {
  if (!(mu1 > 0.0 && mu1 <= 1.0 && mu2 > 0.0 && mu2 <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "marginal purities must lie in (0, 1]");
  }
  const double mu = max_global_purity(mu1, mu2);
  return {mu1, mu2, mu, seralian_lower_bound(mu1, mu2, mu)};
}

}  // namespace gaussent
