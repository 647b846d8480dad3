#include "gaussent/multimode.hpp"

#include <array>
#include <cmath>
#include <sstream>

#include "gaussent/error.hpp"

namespace gaussent {

namespace {

constexpr double kRadicandSlack = 1e-9;

void require_block_count(int n) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "n must be >= 1");
}

double clamped_root(double radicand, const char* what) {
  if (radicand >= 0.0) return std::sqrt(radicand);
  if (radicand >= -kRadicandSlack) return 0.0;
  std::ostringstream msg;
  msg << what << " radicand is negative (" << radicand << ")";
  throw Error(ErrorCode::kUnphysicalState, msg.str());
}

}  // namespace

CovarianceMatrix assemble_symmetric_cm(const SymmetricMultimodeParams& params) {
  require_block_count(params.n);
  const int modes = params.n + 1;
  Matrix m = Matrix::Zero(2 * modes, 2 * modes);
  m(0, 0) = params.a1;
  m(1, 1) = params.a2;
  for (int i = 1; i < modes; ++i) {
    m(2 * i, 0) = m(0, 2 * i) = params.g1;
    m(2 * i + 1, 1) = m(1, 2 * i + 1) = params.g2;
    for (int j = 1; j < modes; ++j) {
      m(2 * i, 2 * j) = i == j ? params.b : params.e1;
      m(2 * i + 1, 2 * j + 1) = i == j ? params.b : params.e2;
    }
  }
  return CovarianceMatrix(std::move(m));
}

CovarianceMatrix build_symmetric_cm(const SymmetricMultimodeParams& params) {
  CovarianceMatrix cm = assemble_symmetric_cm(params);
  if (!check_physical(cm)) {
    throw Error(ErrorCode::kUnphysicalState,
                "symmetric multimode parameters give an unphysical state");
  }
  return cm;
}

BlockSpectrum symmetric_block_spectrum(double b, double e1, double e2, int n) {
  require_block_count(n);
  const double k = n - 1;
  return {clamped_root((b - e1) * (b - e2), "nu-"),
          clamped_root((b + k * e1) * (b + k * e2), "nu+")};
}

LocalizedState localize(const SymmetricMultimodeParams& params) {
  const BlockSpectrum block =
      symmetric_block_spectrum(params.b, params.e1, params.e2, params.n);
  const int n = params.n;
  const double k = n - 1;
  const double det_alpha = params.a1 * params.a2;
  const double c1 = params.b + k * params.e1;
  const double c2 = params.b + k * params.e2;
  const double d1 = params.b - params.e1;
  const double d2 = params.b - params.e2;

  if (!(det_alpha > 0.0) || !(c1 > 0.0) || !(c2 > 0.0) ||
      (n > 1 && !(d1 > 0.0 && d2 > 0.0 &&
                  block.nu_minus >= 1.0 - kPhysicalityTolerance))) {
    throw Error(ErrorCode::kUnphysicalState,
                "symmetric block violates the uncertainty relation");
  }

  LocalizedState out;
  out.nu_minus_block = block.nu_minus;
  out.nu_plus_block = block.nu_plus_n;
  out.degeneracy = n - 1;
  out.mu_alpha = 1.0 / std::sqrt(det_alpha);
  const double decoupled = std::pow(block.nu_minus, k);  // nu-^(N-1)
  out.mu_block = 1.0 / (decoupled * block.nu_plus_n);

  // det sigma = ((b-e1)(b-e2))^(N-1) (a1 c1 - N g1^2)(a2 c2 - N g2^2), the
  // x and p quadratures decouple in block standard form.
  const double det_x = params.a1 * c1 - n * params.g1 * params.g1;
  const double det_p = params.a2 * c2 - n * params.g2 * params.g2;
  const double det_sigma = std::pow(d1 * d2, k) * det_x * det_p;
  if (!(det_x > 0.0) || !(det_p > 0.0) || !(det_sigma > 0.0)) {
    throw Error(ErrorCode::kUnphysicalState,
                "symmetric multimode matrix is not positive definite");
  }
  out.mu_sigma = 1.0 / std::sqrt(det_sigma);
  out.delta_alpha = det_alpha + 2.0 * n * params.g1 * params.g2;

  const double mu2_eq = decoupled * out.mu_block;
  out.equivalent = {out.mu_alpha, mu2_eq, decoupled * out.mu_sigma,
                    out.delta_alpha + 1.0 / (mu2_eq * mu2_eq)};
  if (!validate_invariants(out.equivalent).physical()) {
    throw Error(ErrorCode::kUnphysicalState,
                "equivalent two-mode state is unphysical");
  }
  return out;
}

double direct_negativity(const SymmetricMultimodeParams& params) {
  const std::array<int, 1> alpha{0};
  return log_negativity(build_symmetric_cm(params), alpha);
}

double localized_negativity(const SymmetricMultimodeParams& params) {
  return two_mode_negativity(localize(params).equivalent);
}

EstimatedNegativity estimated_negativity(const SymmetricMultimodeParams& params) {
  const TwoModeInvariants eq = localize(params).equivalent;
  EstimatedNegativity est;
  est.region = classify(eq.mu1, eq.mu2, eq.mu).tag;
  est.bounds = negativity_bounds(eq.mu1, eq.mu2, eq.mu);
  const double total = est.bounds.e_max + est.bounds.e_min;
  est.mean = 0.5 * total;
  if (total > 0.0) est.relative_error = (est.bounds.e_max - est.bounds.e_min) / total;
  return est;
}

OneToNNegativity one_to_n_negativity(const SymmetricMultimodeParams& params,
                                     NegativityMethod method) {
  OneToNNegativity out;
  out.method = method;
  switch (method) {
    case NegativityMethod::kDirect:
      out.value = direct_negativity(params);
      break;
    case NegativityMethod::kLocalized:
      out.value = localized_negativity(params);
      break;
    case NegativityMethod::kEstimated:
      out.estimate = estimated_negativity(params);
      out.value = out.estimate->mean;
      break;
  }
  return out;
}

double one_to_k_negativity(const SymmetricMultimodeParams& params, int k) {
  if (k < 1 || k > params.n) {
    throw Error(ErrorCode::kInvalidArgument, "K must lie in [1, N]");
  }
  SymmetricMultimodeParams reduced = params;
  reduced.n = k;
  return direct_negativity(reduced);
}

}  // namespace gaussent
