#include "gaussent/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "gaussent/error.hpp"

namespace gaussent {

Sampler::Sampler(SamplerConfig config) : config_(config), engine_(config.seed) {
  if (!(config_.mu_floor > 0.0 && config_.mu_floor < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "mu_floor must lie in (0, 1)");
  }
}

double Sampler::uniform(double lo, double hi) {
  const double unit = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * unit;
}

TwoModeInvariants Sampler::two_mode_invariants() {
  for (int attempt = 0; attempt < kMaxRejections; ++attempt) {
    TwoModeInvariants inv;
    inv.mu1 = uniform(config_.mu_floor, 1.0);
    inv.mu2 = uniform(config_.mu_floor, 1.0);
    inv.mu = uniform(min_global_purity(inv.mu1, inv.mu2),
                     max_global_purity(inv.mu1, inv.mu2));
    inv.delta = uniform(seralian_lower_bound(inv.mu1, inv.mu2, inv.mu),
                        seralian_attainable_upper_bound(inv.mu1, inv.mu2, inv.mu));
    if (!config_.region_filter ||
        classify(inv.mu1, inv.mu2, inv.mu).tag == *config_.region_filter) {
      return inv;
    }
  }
  throw Error(ErrorCode::kSamplingExhausted,
              "region filter rejected every sampled state");
}

SymmetricMultimodeParams Sampler::draw_symmetric(int n) {
  if (n == 1) {
    SamplerConfig unfiltered = config_;
    unfiltered.region_filter.reset();
    TwoModeInvariants inv;
    inv.mu1 = uniform(config_.mu_floor, 1.0);
    inv.mu2 = uniform(config_.mu_floor, 1.0);
    inv.mu = uniform(min_global_purity(inv.mu1, inv.mu2),
                     max_global_purity(inv.mu1, inv.mu2));
    inv.delta = uniform(seralian_lower_bound(inv.mu1, inv.mu2, inv.mu),
                        seralian_attainable_upper_bound(inv.mu1, inv.mu2, inv.mu));
    const StandardForm sf = standard_form_from_invariants(inv);
    return {sf.a, sf.a, sf.b, 0.0, 0.0, sf.c_plus, sf.c_minus, 1};
  }

  // Two-mode squeezed thermal pair for alpha and the collective block mode,
  // locally squeezed, then spread over N modes: the collective mode carries
  // b + (N-1) e_i, the N-1 orthogonal modes carry b - e_i.
  const double nu1 = uniform(1.0, 3.0);
  const double nu2 = uniform(1.0, 3.0);
  const double r = uniform(0.0, 1.2);
  const double s1 = uniform(-0.5, 0.5);
  const double s2 = uniform(-0.5, 0.5);
  const double ch = std::cosh(r), sh = std::sinh(r);

  const double xa = nu1 * ch * ch + nu2 * sh * sh;
  const double xc = nu1 * sh * sh + nu2 * ch * ch;
  const double xg = (nu1 + nu2) * ch * sh;
  const double a1 = xa * std::exp(-2.0 * s1);
  const double a2 = xa * std::exp(2.0 * s1);
  const double c1 = xc * std::exp(-2.0 * s2);
  const double c2 = xc * std::exp(2.0 * s2);
  const double g1 = xg * std::exp(-s1 - s2);
  const double g2 = -xg * std::exp(s1 + s2);

  const double k = n - 1;
  for (int attempt = 0; attempt < 64; ++attempt) {
    const double d1 = uniform(1.0, 4.0);
    const double d2 = d1 - (c2 - c1) / k;
    if (!(d2 > 0.0) || d1 * d2 < 1.0) continue;
    const double e1 = (c1 - d1) / n;
    const double e2 = (c2 - d2) / n;
    const double sqrt_n = std::sqrt(static_cast<double>(n));
    return {a1, a2, d1 + e1, e1, e2, g1 / sqrt_n, g2 / sqrt_n, n};
  }
  return {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0};  // rejected by the caller
}

SymmetricMultimodeParams Sampler::symmetric_multimode(int n) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "n must be >= 1");
  for (int attempt = 0; attempt < kMaxRejections; ++attempt) {
    const SymmetricMultimodeParams params = draw_symmetric(n);
    if (params.n != n) continue;
    if (!check_physical(assemble_symmetric_cm(params))) continue;
    if (config_.region_filter) {
      const TwoModeInvariants eq = localize(params).equivalent;
      if (classify(eq.mu1, eq.mu2, eq.mu).tag != *config_.region_filter) continue;
    }
    return params;
  }
  throw Error(ErrorCode::kSamplingExhausted,
              "no physical symmetric state found");
}

Matrix Sampler::random_symplectic(int n_modes, int layers) {
  Matrix s = Matrix::Identity(2 * n_modes, 2 * n_modes);
  for (int layer = 0; layer < layers; ++layer) {
    for (int mode = 0; mode < n_modes; ++mode) {
      s = phase_rotation(n_modes, mode, uniform(0.0, 2.0 * std::numbers::pi)) * s;
    }
    if (n_modes > 1) {
      const int i = static_cast<int>(uniform(0.0, n_modes));
      int j = static_cast<int>(uniform(0.0, n_modes - 1));
      if (j >= i) ++j;
      s = two_mode_squeezer(n_modes, i, j, uniform(-0.3, 0.3)) * s;
    }
    const int mode = static_cast<int>(uniform(0.0, n_modes));
    s = single_mode_squeezer(n_modes, mode, uniform(-0.2, 0.2)) * s;
  }
  return s;
}

CovarianceMatrix Sampler::cm_with_spectrum(std::span<const double> spectrum,
                                           int layers) {
  const int n = static_cast<int>(spectrum.size());
  Matrix diag = Matrix::Zero(2 * n, 2 * n);
  for (int k = 0; k < n; ++k) {
    diag(2 * k, 2 * k) = spectrum[static_cast<std::size_t>(k)];
    diag(2 * k + 1, 2 * k + 1) = spectrum[static_cast<std::size_t>(k)];
  }
  return congruence(random_symplectic(n, layers), CovarianceMatrix(std::move(diag)));
}

CovarianceMatrix Sampler::physical_cm(int n_modes, double max_nu) {
  std::vector<double> spectrum(static_cast<std::size_t>(n_modes));
  for (double& nu : spectrum) nu = uniform(1.0, max_nu);
  return cm_with_spectrum(spectrum);
}

NegativityBounds brute_force_negativity_bounds(double mu1, double mu2, double mu,
                                               int grid) {
  if (classify(mu1, mu2, mu).tag == EntanglementRegion::kUnphysical) {
    throw Error(ErrorCode::kUnphysicalState, "purities outside the physical range");
  }
  grid = std::max(grid, 2);
  const double lo = seralian_lower_bound(mu1, mu2, mu);
  const double hi = std::max(lo, seralian_attainable_upper_bound(mu1, mu2, mu));
  NegativityBounds out{std::numeric_limits<double>::infinity(), 0.0};
  for (int k = 0; k < grid; ++k) {
    const double delta = lo + (hi - lo) * k / (grid - 1);
    const double en = two_mode_negativity({mu1, mu2, mu, delta});
    out.e_min = std::min(out.e_min, en);
    out.e_max = std::max(out.e_max, en);
  }
  return out;
}

}  // namespace gaussent
