#include "gaussent/entropy.hpp"

#include <cmath>
#include <string>

#include "gaussent/error.hpp"

namespace gaussent {

namespace {

constexpr double kUnitSlack = 1e-9;

void require_order(double p) {
  if (!(p > 1.0) || !std::isfinite(p)) {
    throw Error(ErrorCode::kDomainError,
                "entropy order p must be a finite real > 1, got " +
                    std::to_string(p));
  }
}

double clamp_to_unit(double x) {
  if (!(x >= 1.0 - kUnitSlack)) {
    throw Error(ErrorCode::kDomainError,
                "symplectic eigenvalue " + std::to_string(x) + " < 1");
  }
  return x < 1.0 ? 1.0 : x;
}

}  // namespace

double g_p(double x, double p) {
  require_order(p);
  x = clamp_to_unit(x);
  // (2/(x+1))^p / (1 - ((x-1)/(x+1))^p) avoids overflow for large x.
  const double ratio = (x - 1.0) / (x + 1.0);
  return std::pow(2.0 / (x + 1.0), p) / (1.0 - std::pow(ratio, p));
}

double von_neumann_term(double x) {
  x = clamp_to_unit(x);
  const double up = 0.5 * (x + 1.0);
  const double down = 0.5 * (x - 1.0);
  const double down_term = down > 0.0 ? down * std::log(down) : 0.0;
  return up * std::log(up) - down_term;
}

double trace_rho_p(std::span<const double> symplectic_eigs, double p) {
  double product = 1.0;
  for (double nu : symplectic_eigs) product *= g_p(nu, p);
  return product;
}

double tsallis_from_spectrum(std::span<const double> symplectic_eigs,
                             double p) {
  return (1.0 - trace_rho_p(symplectic_eigs, p)) / (p - 1.0);
}

double renyi_from_spectrum(std::span<const double> symplectic_eigs, double p) {
  double log_trace = 0.0;
  for (double nu : symplectic_eigs) log_trace += std::log(g_p(nu, p));
  return -log_trace / (p - 1.0);
}

double von_neumann_from_spectrum(std::span<const double> symplectic_eigs) {
  double s = 0.0;
  for (double nu : symplectic_eigs) s += von_neumann_term(nu);
  return s;
}

double purity(const CovarianceMatrix& cm) {
  const double det = cm.entries().determinant();
  if (!(det > 0.0)) {
    throw Error(ErrorCode::kUnphysicalState,
                "covariance determinant is not positive");
  }
  return 1.0 / std::sqrt(det);
}

double linear_entropy(const CovarianceMatrix& cm) { return 1.0 - purity(cm); }

double tsallis_entropy(const CovarianceMatrix& cm, double p) {
  return tsallis_from_spectrum(symplectic_spectrum(cm).values, p);
}

double renyi_entropy(const CovarianceMatrix& cm, double p) {
  return renyi_from_spectrum(symplectic_spectrum(cm).values, p);
}

double von_neumann_entropy(const CovarianceMatrix& cm) {
  return von_neumann_from_spectrum(symplectic_spectrum(cm).values);
}

double entropy(const CovarianceMatrix& cm, const EntropySpec& spec) {
  switch (spec.family) {
    case EntropyFamily::kPurity: return purity(cm);
    case EntropyFamily::kLinear: return linear_entropy(cm);
    case EntropyFamily::kTsallis: return tsallis_entropy(cm, spec.p);
    case EntropyFamily::kRenyi: return renyi_entropy(cm, spec.p);
    case EntropyFamily::kVonNeumann: return von_neumann_entropy(cm);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown entropy family");
}

double entropy_from_spectrum(std::span<const double> symplectic_eigs,
                             const EntropySpec& spec) {
  switch (spec.family) {
    case EntropyFamily::kPurity: return trace_rho_p(symplectic_eigs, 2.0);
    case EntropyFamily::kLinear: return tsallis_from_spectrum(symplectic_eigs, 2.0);
    case EntropyFamily::kTsallis: return tsallis_from_spectrum(symplectic_eigs, spec.p);
    case EntropyFamily::kRenyi: return renyi_from_spectrum(symplectic_eigs, spec.p);
    case EntropyFamily::kVonNeumann: return von_neumann_from_spectrum(symplectic_eigs);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown entropy family");
}

}  // namespace gaussent
