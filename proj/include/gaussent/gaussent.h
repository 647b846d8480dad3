/* C interface to the gaussent library. All functions return a ge_status;
 * on failure ge_last_error() holds a message for the calling thread. */
#ifndef GAUSSENT_H
#define GAUSSENT_H

#include <stddef.h>
#include <stdint.h>

#if defined(GE_BUILDING_LIBRARY)
#define GE_API __attribute__((visibility("default")))
#else
#define GE_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  GE_OK = 0,
  GE_ERR_INVALID_ARGUMENT,
  GE_ERR_UNPHYSICAL,
  GE_ERR_PAIRING_FAILURE,
  GE_ERR_DOMAIN,
  GE_ERR_INDEX_OUT_OF_RANGE,
  GE_ERR_NO_SOLUTION,
  GE_ERR_NO_INVERSION,
  GE_ERR_DEGENERATE_REGION,
  GE_ERR_OUT_OF_RANGE,
  GE_ERR_SAMPLING_EXHAUSTED,
  GE_ERR_PARSE,
  GE_ERR_IO,
  GE_ERR_INTERNAL
} ge_status;

/* machine-readable code, e.g. "unphysical" */
GE_API const char* ge_status_name(ge_status status);
GE_API const char* ge_last_error(void);

/* ---- covariance matrices ---- */

typedef struct ge_cm ge_cm;

GE_API ge_status ge_cm_create(int n_modes, const double* row_major, ge_cm** out);
GE_API ge_status ge_cm_parse_json(const char* text, ge_cm** out);
GE_API ge_status ge_cm_load_file(const char* path, ge_cm** out);
GE_API void ge_cm_free(ge_cm* cm);
GE_API int ge_cm_n_modes(const ge_cm* cm);
/* len >= (2N)^2 */
GE_API ge_status ge_cm_entries(const ge_cm* cm, double* out, size_t len);

/* ascending, len >= N */
GE_API ge_status ge_symplectic_spectrum(const ge_cm* cm, double* out, size_t len);
GE_API ge_status ge_check_physical(const ge_cm* cm, double tol, int* out);
/* modes are 0-based */
GE_API ge_status ge_partial_transpose_spectrum(const ge_cm* cm, const int* modes,
                                               size_t n_modes, double* out, size_t len);
GE_API ge_status ge_log_negativity(const ge_cm* cm, const int* partition,
                                   size_t n_partition, double* out);
GE_API ge_status ge_global_invariants(const ge_cm* cm, double* det_sigma, double* seralian);

/* ---- entropies ---- */

typedef enum {
  GE_ENTROPY_PURITY = 0,
  GE_ENTROPY_LINEAR,
  GE_ENTROPY_TSALLIS,
  GE_ENTROPY_RENYI,
  GE_ENTROPY_VON_NEUMANN
} ge_entropy_family;

GE_API ge_status ge_entropy(const ge_cm* cm, ge_entropy_family family, double p, double* out);
GE_API ge_status ge_entropy_from_spectrum(const double* eigs, size_t n, ge_entropy_family family,
                                          double p, double* out);
GE_API ge_status ge_g_p(double x, double p, double* out);

/* ---- two-mode invariants ---- */

typedef struct {
  double mu1, mu2, mu, delta;
} ge_invariants;

typedef struct {
  double lower, value, upper;
  int pass;
} ge_bound_check;

typedef struct {
  ge_bound_check mu1, mu2, mu, delta, delta_attainable;
  int physical;
} ge_validation;

typedef struct {
  double a, b, c_plus, c_minus;
} ge_standard_form;

GE_API ge_status ge_invariants_from_cm(const ge_cm* cm, ge_invariants* out);
GE_API ge_status ge_validate_invariants(const ge_invariants* inv, ge_validation* out);
GE_API ge_status ge_standard_form_from_invariants(const ge_invariants* inv, ge_standard_form* out);
GE_API ge_status ge_standard_form_to_cm(const ge_standard_form* form, ge_cm** out);
GE_API ge_status ge_ppt_symplectic_eigs(const ge_invariants* inv, double* nu_minus,
                                        double* nu_plus);
GE_API ge_status ge_two_mode_negativity(const ge_invariants* inv, double* out);

/* ---- extremal states and bounds ---- */

typedef enum {
  GE_REGION_UNPHYSICAL = 0,
  GE_REGION_SEPARABLE,
  GE_REGION_COEXISTENCE,
  GE_REGION_ENTANGLED
} ge_region;

typedef struct {
  ge_region region;
  double product, separable, coexistence, gmemms;
} ge_class;

typedef struct {
  double e_min, e_max, mean, relative_error;
  int has_relative_error;
} ge_bounds;

typedef struct {
  ge_standard_form form;
  double nu_minus, nu_plus, r;
  int modes_swapped;
} ge_gmems_state;

GE_API const char* ge_region_name(ge_region region);
GE_API ge_status ge_classify(double mu1, double mu2, double mu, ge_class* out);
GE_API ge_status ge_negativity_bounds(double mu1, double mu2, double mu, ge_bounds* out);
GE_API ge_status ge_gmems(double mu1, double mu2, double mu, ge_gmems_state* out);
GE_API ge_status ge_glems(double mu1, double mu2, double mu, ge_standard_form* out);
GE_API ge_status ge_squeezed_thermal_form(double nu_minus, double nu_plus, double r,
                                          ge_standard_form* out);

/* ---- entropic bounds ---- */

typedef enum { GE_FAMILY_GMEMS = 0, GE_FAMILY_GLEMS, GE_FAMILY_INTERIOR } ge_family;

typedef struct {
  double mu, delta, negativity, nu_tilde_minus;
} ge_entropic_point;

typedef struct {
  double e_min, e_max;
  ge_family argmin_family, argmax_family;
  ge_entropic_point gmems_edge, glems_edge;
  double delta_min, delta_max;
} ge_entropic_bounds;

typedef struct {
  double s_marginal;
  int found;
  double s_nodal, derivative;
} ge_nodal;

/* Grid densities of the entropic solvers; pass NULL for the defaults
   (512, 2000, 64). */
typedef struct {
  int bracket_cells;
  int delta_points;
  int nodal_scan_points;
} ge_entropic_options;

GE_API ge_entropic_options ge_entropic_default_options(void);
GE_API const char* ge_family_name(ge_family family);
/* family is GE_ENTROPY_TSALLIS, GE_ENTROPY_LINEAR or GE_ENTROPY_VON_NEUMANN */
GE_API ge_status ge_entropic_negativity_bounds(ge_entropy_family family, double p, double s_global,
                                               double s1, double s2, const ge_entropic_options* options,
                                               ge_entropic_bounds* out);
GE_API ge_status ge_mean_delta_derivative(ge_entropy_family family, double p, double s_global,
                                          double s1, double s2, const ge_entropic_options* options,
                                          double* out);
GE_API ge_status ge_attainable_global_entropy(ge_entropy_family family, double p, double s1,
                                              double s2, const ge_entropic_options* options,
                                              double* lo, double* hi);
GE_API ge_status ge_nodal_point(ge_entropy_family family, double p, double s_marginal,
                                const ge_entropic_options* options, ge_nodal* out);
/* +inf for the von Neumann entropy */
GE_API ge_status ge_single_mode_entropy_supremum(ge_entropy_family family, double p, double* out);
GE_API ge_status ge_marginal_purity_from_entropy(ge_entropy_family family, double p, double s,
                                                 double* out);

/* ---- symmetric multimode states ---- */

typedef struct {
  double a1, a2, b, e1, e2, g1, g2;
  int n;
} ge_symmetric_params;

typedef struct {
  ge_invariants equivalent;
  double nu_minus_block;
  int degeneracy;
  double nu_plus_block, mu_alpha, mu_block, mu_sigma, delta_alpha;
} ge_localized;

typedef enum { GE_METHOD_DIRECT = 0, GE_METHOD_LOCALIZED, GE_METHOD_ESTIMATED } ge_method;

typedef struct {
  ge_method method;
  double value;
  int has_estimate;
  ge_region region;
  ge_bounds estimate;
} ge_multimode_negativity;

GE_API ge_status ge_symmetric_cm(const ge_symmetric_params* params, ge_cm** out);
GE_API ge_status ge_localize(const ge_symmetric_params* params, ge_localized* out);
GE_API ge_status ge_one_to_n_negativity(const ge_symmetric_params* params, ge_method method,
                                        ge_multimode_negativity* out);
GE_API ge_status ge_one_to_k_negativity(const ge_symmetric_params* params, int k, double* out);

/* ---- sampling ---- */

typedef struct ge_sampler ge_sampler;

/* region_filter < 0 disables filtering */
GE_API ge_status ge_sampler_create(uint64_t seed, double mu_floor, int region_filter,
                                   ge_sampler** out);
GE_API void ge_sampler_free(ge_sampler* sampler);
GE_API ge_status ge_sampler_two_mode(ge_sampler* sampler, ge_invariants* out);
GE_API ge_status ge_sampler_symmetric(ge_sampler* sampler, int n, ge_symmetric_params* out);
GE_API ge_status ge_sampler_physical_cm(ge_sampler* sampler, int n_modes, double max_nu,
                                        ge_cm** out);
GE_API ge_status ge_brute_force_negativity_bounds(double mu1, double mu2, double mu, int grid,
                                                  double* e_min, double* e_max);

#ifdef __cplusplus
}
#endif

#endif
