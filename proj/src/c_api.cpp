#include "gaussent/gaussent.h"

#include <exception>
#include <string>
#include <vector>

#include "gaussent/cm_io.hpp"
#include "gaussent/covariance.hpp"
#include "gaussent/entropic_bounds.hpp"
#include "gaussent/entropy.hpp"
#include "gaussent/error.hpp"
#include "gaussent/extremal.hpp"
#include "gaussent/multimode.hpp"
#include "gaussent/sampler.hpp"
#include "gaussent/two_mode.hpp"

struct ge_cm {
  gaussent::CovarianceMatrix cm;
};

struct ge_sampler {
  gaussent::Sampler sampler;
};

namespace {

using namespace gaussent;

thread_local std::string g_last_error;

ge_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return GE_ERR_INVALID_ARGUMENT;
    case ErrorCode::kUnphysicalState: return GE_ERR_UNPHYSICAL;
    case ErrorCode::kPairingFailure: return GE_ERR_PAIRING_FAILURE;
    case ErrorCode::kDomainError: return GE_ERR_DOMAIN;
    case ErrorCode::kIndexOutOfRange: return GE_ERR_INDEX_OUT_OF_RANGE;
    case ErrorCode::kNoSolution: return GE_ERR_NO_SOLUTION;
    case ErrorCode::kNoInversion: return GE_ERR_NO_INVERSION;
    case ErrorCode::kDegenerateRegion: return GE_ERR_DEGENERATE_REGION;
    case ErrorCode::kOutOfRange: return GE_ERR_OUT_OF_RANGE;
    case ErrorCode::kSamplingExhausted: return GE_ERR_SAMPLING_EXHAUSTED;
    case ErrorCode::kParseError: return GE_ERR_PARSE;
    case ErrorCode::kIoError: return GE_ERR_IO;
  }
  return GE_ERR_INTERNAL;
}

template <class F>
ge_status guarded(F&& body) {
  try {
    body();
    g_last_error.clear();
    return GE_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return GE_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown exception";
    return GE_ERR_INTERNAL;
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::kInvalidArgument, what);
}

TwoModeInvariants to_cpp(const ge_invariants& in) {
  return {in.mu1, in.mu2, in.mu, in.delta};
}

ge_invariants to_c(const TwoModeInvariants& in) {
  return {in.mu1, in.mu2, in.mu, in.delta};
}

ge_standard_form to_c(const StandardForm& f) {
  return {f.a, f.b, f.c_plus, f.c_minus};
}

ge_bound_check to_c(const BoundCheck& b) {
  return {b.lower, b.value, b.upper, b.pass ? 1 : 0};
}

ge_entropic_point to_c(const EntropicPoint& p) {
  return {p.mu, p.delta, p.negativity, p.nu_tilde_minus};
}

ge_family to_c(ExtremalFamily f) {
  switch (f) {
    case ExtremalFamily::kGmemsEdge: return GE_FAMILY_GMEMS;
    case ExtremalFamily::kGlemsEdge: return GE_FAMILY_GLEMS;
    case ExtremalFamily::kInterior: return GE_FAMILY_INTERIOR;
  }
  return GE_FAMILY_INTERIOR;
}

ge_region to_c(EntanglementRegion r) {
  return static_cast<ge_region>(static_cast<int>(r));
}

EntropySpec to_spec(ge_entropy_family family, double p) {
  switch (family) {
    case GE_ENTROPY_PURITY: return {EntropyFamily::kPurity, p};
    case GE_ENTROPY_LINEAR: return {EntropyFamily::kLinear, p};
    case GE_ENTROPY_TSALLIS: return {EntropyFamily::kTsallis, p};
    case GE_ENTROPY_RENYI: return {EntropyFamily::kRenyi, p};
    case GE_ENTROPY_VON_NEUMANN: return {EntropyFamily::kVonNeumann, p};
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown entropy family");
}

EntropicOptions to_options(const ge_entropic_options* options) {
  if (options == nullptr) return {};
  require(options->bracket_cells >= 2 && options->delta_points >= 2 &&
              options->nodal_scan_points >= 2,
          "grid densities must be at least 2");
  return {options->bracket_cells, options->delta_points, options->nodal_scan_points};
}

SymmetricMultimodeParams to_cpp(const ge_symmetric_params& p) {
  return {p.a1, p.a2, p.b, p.e1, p.e2, p.g1, p.g2, p.n};
}

ge_symmetric_params to_c(const SymmetricMultimodeParams& p) {
  return {p.a1, p.a2, p.b, p.e1, p.e2, p.g1, p.g2, p.n};
}

ge_cm* wrap(CovarianceMatrix cm) { return new ge_cm{std::move(cm)}; }

std::vector<int> to_modes(const int* modes, std::size_t n) {
  require(modes != nullptr || n == 0, "null mode list");
  return std::vector<int>(modes, modes + n);
}

}  // namespace

extern "C" {

const char* ge_status_name(ge_status status) {
  switch (status) {
    case GE_OK: return "ok";
    case GE_ERR_INVALID_ARGUMENT: return error_code_name(ErrorCode::kInvalidArgument);
    case GE_ERR_UNPHYSICAL: return error_code_name(ErrorCode::kUnphysicalState);
    case GE_ERR_PAIRING_FAILURE: return error_code_name(ErrorCode::kPairingFailure);
    case GE_ERR_DOMAIN: return error_code_name(ErrorCode::kDomainError);
    case GE_ERR_INDEX_OUT_OF_RANGE: return error_code_name(ErrorCode::kIndexOutOfRange);
    case GE_ERR_NO_SOLUTION: return error_code_name(ErrorCode::kNoSolution);
    case GE_ERR_NO_INVERSION: return error_code_name(ErrorCode::kNoInversion);
    case GE_ERR_DEGENERATE_REGION: return error_code_name(ErrorCode::kDegenerateRegion);
    case GE_ERR_OUT_OF_RANGE: return error_code_name(ErrorCode::kOutOfRange);
    case GE_ERR_SAMPLING_EXHAUSTED: return error_code_name(ErrorCode::kSamplingExhausted);
    case GE_ERR_PARSE: return error_code_name(ErrorCode::kParseError);
    case GE_ERR_IO: return error_code_name(ErrorCode::kIoError);
    case GE_ERR_INTERNAL: return "internal";
  }
  return "internal";
}

const char* ge_last_error(void) { return g_last_error.c_str(); }

// ---- covariance matrices

ge_status ge_cm_create(int n_modes, const double* row_major, ge_cm** out) {
  return guarded([&] {
    require(out != nullptr && row_major != nullptr, "null argument");
    require(n_modes >= 1, "n_modes must be positive");
    const int dim = 2 * n_modes;
    Matrix m(dim, dim);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) m(i, j) = row_major[i * dim + j];
    *out = wrap(CovarianceMatrix(std::move(m)));
  });
}

ge_status ge_cm_parse_json(const char* text, ge_cm** out) {
  return guarded([&] {
    require(out != nullptr && text != nullptr, "null argument");
    *out = wrap(parse_cm_json(text));
  });
}

ge_status ge_cm_load_file(const char* path, ge_cm** out) {
  return guarded([&] {
    require(out != nullptr && path != nullptr, "null argument");
    *out = wrap(load_cm_file(path));
  });
}

void ge_cm_free(ge_cm* cm) { delete cm; }

int ge_cm_n_modes(const ge_cm* cm) { return cm ? cm->cm.n_modes() : 0; }

ge_status ge_cm_entries(const ge_cm* cm, double* out, size_t len) {
  return guarded([&] {
    require(cm != nullptr && out != nullptr, "null argument");
    const int dim = cm->cm.dim();
    require(len >= static_cast<size_t>(dim * dim), "output buffer too small");
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) out[i * dim + j] = cm->cm(i, j);
  });
}

ge_status ge_symplectic_spectrum(const ge_cm* cm, double* out, size_t len) {
  return guarded([&] {
    require(cm != nullptr && out != nullptr, "null argument");
    const SymplecticSpectrum s = symplectic_spectrum(cm->cm);
    require(len >= s.size(), "output buffer too small");
    for (std::size_t k = 0; k < s.size(); ++k) out[k] = s.values[k];
  });
}

ge_status ge_check_physical(const ge_cm* cm, double tol, int* out) {
  return guarded([&] {
    require(cm != nullptr && out != nullptr, "null argument");
    *out = check_physical(cm->cm, tol) ? 1 : 0;
  });
}

ge_status ge_partial_transpose_spectrum(const ge_cm* cm, const int* modes, size_t n_modes,
                                        double* out, size_t len) {
  return guarded([&] {
    require(cm != nullptr && out != nullptr, "null argument");
    const std::vector<int> m = to_modes(modes, n_modes);
    const SymplecticSpectrum s = symplectic_spectrum(partial_transpose(cm->cm, m));
    require(len >= s.size(), "output buffer too small");
    for (std::size_t k = 0; k < s.size(); ++k) out[k] = s.values[k];
  });
}

ge_status ge_log_negativity(const ge_cm* cm, const int* partition, size_t n_partition,
                            double* out) {
  return guarded([&] {
    require(cm != nullptr && out != nullptr, "null argument");
    *out = log_negativity(cm->cm, to_modes(partition, n_partition));
  });
}

ge_status ge_global_invariants(const ge_cm* cm, double* det_sigma, double* seralian) {
  return guarded([&] {
    require(cm != nullptr && det_sigma != nullptr && seralian != nullptr, "null argument");
    const GlobalInvariants g = global_invariants(cm->cm);
    *det_sigma = g.det_sigma;
    *seralian = g.seralian;
  });
}

// ---- entropies

ge_status ge_entropy(const ge_cm* cm, ge_entropy_family family, double p, double* out) {
  return guarded([&] {
    require(cm != nullptr && out != nullptr, "null argument");
    *out = entropy(cm->cm, to_spec(family, p));
  });
}

ge_status ge_entropy_from_spectrum(const double* eigs, size_t n, ge_entropy_family family,
                                   double p, double* out) {
  return guarded([&] {
    require(eigs != nullptr && out != nullptr, "null argument");
    *out = entropy_from_spectrum(std::span<const double>(eigs, n), to_spec(family, p));
  });
}

ge_status ge_g_p(double x, double p, double* out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    *out = g_p(x, p);
  });
}

// ---- two-mode invariants

ge_status ge_invariants_from_cm(const ge_cm* cm, ge_invariants* out) {
  return guarded([&] {
    require(cm != nullptr && out != nullptr, "null argument");
    *out = to_c(invariants_from_cm(cm->cm));
  });
}

ge_status ge_validate_invariants(const ge_invariants* inv, ge_validation* out) {
  return guarded([&] {
    require(inv != nullptr && out != nullptr, "null argument");
    const ValidationReport r = validate_invariants(to_cpp(*inv));
    *out = {to_c(r.mu1), to_c(r.mu2), to_c(r.mu), to_c(r.delta), to_c(r.delta_attainable),
            r.physical() ? 1 : 0};
  });
}

ge_status ge_standard_form_from_invariants(const ge_invariants* inv, ge_standard_form* out) {
  return guarded([&] {
    require(inv != nullptr && out != nullptr, "null argument");
    *out = to_c(standard_form_from_invariants(to_cpp(*inv)));
  });
}

ge_status ge_standard_form_to_cm(const ge_standard_form* form, ge_cm** out) {
  return guarded([&] {
    require(form != nullptr && out != nullptr, "null argument");
    *out = wrap(StandardForm{form->a, form->b, form->c_plus, form->c_minus}.to_cm());
  });
}

ge_status ge_ppt_symplectic_eigs(const ge_invariants* inv, double* nu_minus, double* nu_plus) {
  return guarded([&] {
    require(inv != nullptr && nu_minus != nullptr && nu_plus != nullptr, "null argument");
    const SymplecticPair pair = ppt_symplectic_eigs(to_cpp(*inv));
    *nu_minus = pair.nu_minus;
    *nu_plus = pair.nu_plus;
  });
}

ge_status ge_two_mode_negativity(const ge_invariants* inv, double* out) {
  return guarded([&] {
    require(inv != nullptr && out != nullptr, "null argument");
    *out = two_mode_negativity(to_cpp(*inv));
  });
}

// ---- extremal states and bounds

const char* ge_region_name(ge_region region) {
  return region_name(static_cast<EntanglementRegion>(static_cast<int>(region)));
}

ge_status ge_classify(double mu1, double mu2, double mu, ge_class* out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    const EntanglementClass c = classify(mu1, mu2, mu);
    *out = {to_c(c.tag), c.thresholds.product, c.thresholds.separable,
            c.thresholds.coexistence, c.thresholds.gmemms};
  });
}

ge_status ge_negativity_bounds(double mu1, double mu2, double mu, ge_bounds* out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    const NegativityBounds b = negativity_bounds(mu1, mu2, mu);
    const double total = b.e_min + b.e_max;
    *out = {b.e_min, b.e_max, 0.5 * total, 0.0, 0};
    if (total > 0.0) {
      const AverageNegativity avg = average_negativity(mu1, mu2, mu);
      out->mean = avg.mean;
      out->relative_error = avg.relative_error;
      out->has_relative_error = 1;
    }
  });
}

ge_status ge_gmems(double mu1, double mu2, double mu, ge_gmems_state* out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    const GmemsState g = gmems(mu1, mu2, mu);
    *out = {to_c(g.form), g.params.nu_minus, g.params.nu_plus, g.params.r,
            g.params.modes_swapped ? 1 : 0};
  });
}

ge_status ge_glems(double mu1, double mu2, double mu, ge_standard_form* out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    *out = to_c(glems(mu1, mu2, mu));
  });
}

ge_status ge_squeezed_thermal_form(double nu_minus, double nu_plus, double r,
                                   ge_standard_form* out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    *out = to_c(squeezed_thermal_form(nu_minus, nu_plus, r));
  });
}

// ---- entropic bounds

const char* ge_family_name(ge_family family) {
  switch (family) {
    case GE_FAMILY_GMEMS: return family_name(ExtremalFamily::kGmemsEdge);
    case GE_FAMILY_GLEMS: return family_name(ExtremalFamily::kGlemsEdge);
    case GE_FAMILY_INTERIOR: return family_name(ExtremalFamily::kInterior);
  }
  return "unknown";
}

ge_entropic_options ge_entropic_default_options(void) {
  const EntropicOptions d;
  return {d.bracket_cells, d.delta_points, d.nodal_scan_points};
}

ge_status ge_entropic_negativity_bounds(ge_entropy_family family, double p, double s_global,
                                        double s1, double s2, const ge_entropic_options* options,
                                        ge_entropic_bounds* out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    const EntropicBounds b =
        entropic_negativity_bounds({to_spec(family, p), s_global, s1, s2}, to_options(options));
    *out = {b.e_min,
            b.e_max,
            to_c(b.argmin_family),
            to_c(b.argmax_family),
            to_c(b.gmems_edge),
            to_c(b.glems_edge),
            b.delta_min,
            b.delta_max};
  });
}

ge_status ge_mean_delta_derivative(ge_entropy_family family, double p, double s_global,
                                   double s1, double s2, const ge_entropic_options* options,
                                   double* out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    *out = mean_delta_derivative({to_spec(family, p), s_global, s1, s2}, to_options(options));
  });
}

ge_status ge_attainable_global_entropy(ge_entropy_family family, double p, double s1,
                                       double s2, const ge_entropic_options* options,
                                       double* lo, double* hi) {
  return guarded([&] {
    require(lo != nullptr && hi != nullptr, "null argument");
    const EntropyRange r = attainable_global_entropy(s1, s2, to_spec(family, p), to_options(options));
    *lo = r.lo;
    *hi = r.hi;
  });
}

ge_status ge_nodal_point(ge_entropy_family family, double p, double s_marginal,
                         const ge_entropic_options* options, ge_nodal* out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    const NodalPoint n = nodal_point(s_marginal, to_spec(family, p), to_options(options));
    *out = {n.s_marginal, n.found ? 1 : 0, n.s_nodal, n.derivative};
  });
}

ge_status ge_single_mode_entropy_supremum(ge_entropy_family family, double p, double* out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    *out = single_mode_entropy_supremum(to_spec(family, p));
  });
}

ge_status ge_marginal_purity_from_entropy(ge_entropy_family family, double p, double s,
                                          double* out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    *out = marginal_purity_from_entropy(s, to_spec(family, p));
  });
}

// ---- symmetric multimode states

ge_status ge_symmetric_cm(const ge_symmetric_params* params, ge_cm** out) {
  return guarded([&] {
    require(params != nullptr && out != nullptr, "null argument");
    *out = wrap(build_symmetric_cm(to_cpp(*params)));
  });
}

ge_status ge_localize(const ge_symmetric_params* params, ge_localized* out) {
  return guarded([&] {
    require(params != nullptr && out != nullptr, "null argument");
    const LocalizedState s = localize(to_cpp(*params));
    *out = {to_c(s.equivalent), s.nu_minus_block, s.degeneracy, s.nu_plus_block,
            s.mu_alpha,         s.mu_block,       s.mu_sigma,   s.delta_alpha};
  });
}

ge_status ge_one_to_n_negativity(const ge_symmetric_params* params, ge_method method,
                                 ge_multimode_negativity* out) {
  return guarded([&] {
    require(params != nullptr && out != nullptr, "null argument");
    require(method >= GE_METHOD_DIRECT && method <= GE_METHOD_ESTIMATED, "unknown method");
    const OneToNNegativity r =
        one_to_n_negativity(to_cpp(*params), static_cast<NegativityMethod>(method));
    *out = {};
    out->method = method;
    out->value = r.value;
    if (r.estimate) {
      out->has_estimate = 1;
      out->region = to_c(r.estimate->region);
      out->estimate = {r.estimate->bounds.e_min, r.estimate->bounds.e_max, r.estimate->mean,
                       r.estimate->relative_error.value_or(0.0),
                       r.estimate->relative_error ? 1 : 0};
    }
  });
}

ge_status ge_one_to_k_negativity(const ge_symmetric_params* params, int k, double* out) {
  return guarded([&] {
    require(params != nullptr && out != nullptr, "null argument");
    *out = one_to_k_negativity(to_cpp(*params), k);
  });
}

// ---- sampling

ge_status ge_sampler_create(uint64_t seed, double mu_floor, int region_filter,
                            ge_sampler** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    SamplerConfig config;
    config.seed = seed;
    config.mu_floor = mu_floor;
    if (region_filter >= 0) {
      require(region_filter <= GE_REGION_ENTANGLED, "unknown region");
      config.region_filter = static_cast<EntanglementRegion>(region_filter);
    }
    *out = new ge_sampler{Sampler(config)};
  });
}

void ge_sampler_free(ge_sampler* sampler) { delete sampler; }

ge_status ge_sampler_two_mode(ge_sampler* sampler, ge_invariants* out) {
  return guarded([&] {
    require(sampler != nullptr && out != nullptr, "null argument");
    *out = to_c(sampler->sampler.two_mode_invariants());
  });
}

ge_status ge_sampler_symmetric(ge_sampler* sampler, int n, ge_symmetric_params* out) {
  return guarded([&] {
    require(sampler != nullptr && out != nullptr, "null argument");
    *out = to_c(sampler->sampler.symmetric_multimode(n));
  });
}

ge_status ge_sampler_physical_cm(ge_sampler* sampler, int n_modes, double max_nu,
                                 ge_cm** out) {
  return guarded([&] {
    require(sampler != nullptr && out != nullptr, "null argument");
    require(n_modes >= 1 && max_nu >= 1.0, "need n_modes >= 1 and max_nu >= 1");
    *out = wrap(sampler->sampler.physical_cm(n_modes, max_nu));
  });
}

ge_status ge_brute_force_negativity_bounds(double mu1, double mu2, double mu, int grid,
                                           double* e_min, double* e_max) {
  return guarded([&] {
    require(e_min != nullptr && e_max != nullptr, "null argument");
    const NegativityBounds b = brute_force_negativity_bounds(mu1, mu2, mu, grid);
    *e_min = b.e_min;
    *e_max = b.e_max;
  });
}

}  // extern "C"
