/*
 * fixpointlab — fixed-point iteration schemes, contractive-condition
 * certification and coupled-run equivalence audits on box domains.
 *
 * C API over the C++ core: opaque handles, integer status codes, and a
 * thread-local message for the last failing call. Strings returned by the
 * *_json / *_csv / name accessors are owned by the handle they came from and
 * stay valid until that handle is freed.
 */
#ifndef FIXPOINTLAB_H
#define FIXPOINTLAB_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define FXL_API __declspec(dllexport)
#else
#define FXL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fxl_status {
  FXL_OK = 0,
  FXL_ERR_INVALID_ARGUMENT = 1,
  FXL_ERR_IO = 2,
  FXL_ERR_PARSE = 3,
  FXL_ERR_DOMAIN_ESCAPE = 4,
  FXL_ERR_INVALID_CONSTANTS = 5,
  FXL_ERR_NON_FINITE_VALUE = 6,
  FXL_ERR_MISSING_FIXED_POINT = 7,
  FXL_ERR_SCHEDULE_FLOOR_VIOLATED = 8,
  FXL_ERR_SCHEME_MISMATCH = 9,
  FXL_ERR_MALFORMED_WITNESS = 10,
  FXL_ERR_UNKNOWN_FAMILY = 11,
  FXL_ERR_FIXED_POINT_CONTRADICTION = 12,
  FXL_ERR_INTERNAL = 13
} fxl_status;

FXL_API const char* fxl_status_name(fxl_status status);
/* Message describing the most recent failure on the calling thread. */
FXL_API const char* fxl_last_error(void);

typedef struct fxl_corpus fxl_corpus;
typedef struct fxl_map fxl_map; /* borrowed from its corpus */
typedef struct fxl_norm fxl_norm;
typedef struct fxl_gauge fxl_gauge;
typedef struct fxl_schedule fxl_schedule;
typedef struct fxl_scheme fxl_scheme;
typedef struct fxl_check fxl_check;
typedef struct fxl_trajectory fxl_trajectory;
typedef struct fxl_coupled fxl_coupled;
typedef struct fxl_audit fxl_audit;
typedef struct fxl_recurrence_verdict fxl_recurrence_verdict;
typedef struct fxl_suite fxl_suite;

typedef struct fxl_stopping {
  double tol;
  size_t max_iters;
  double divergence_bound;
} fxl_stopping;

FXL_API fxl_stopping fxl_stopping_default(void); /* 1e-10, 10000, 1e12 */

/* ---- mapping corpus (JSON array of map entries) ---- */

FXL_API fxl_status fxl_corpus_load(const char* path, fxl_corpus** out);
FXL_API fxl_status fxl_corpus_parse(const char* json_text, fxl_corpus** out);
FXL_API void fxl_corpus_free(fxl_corpus* corpus);
FXL_API size_t fxl_corpus_size(const fxl_corpus* corpus);
FXL_API const char* fxl_corpus_label(const fxl_corpus* corpus, size_t index);
/* Borrowed handle; valid while the corpus lives. */
FXL_API fxl_status fxl_corpus_map(const fxl_corpus* corpus, const char* label,
                                  const fxl_map** out);

FXL_API size_t fxl_map_dimension(const fxl_map* map);
FXL_API const char* fxl_map_label(const fxl_map* map);
FXL_API int fxl_map_has_fixed_point(const fxl_map* map);
FXL_API fxl_status fxl_map_fixed_point(const fxl_map* map, double* out);
FXL_API fxl_status fxl_map_domain(const fxl_map* map, double* lo, double* hi);
FXL_API fxl_status fxl_map_eval(const fxl_map* map, const double* x, double* out);

/* ---- norms and gauge functions ---- */

FXL_API fxl_status fxl_norm_p(double p, fxl_norm** out); /* p >= 1; HUGE_VAL = max norm */
FXL_API fxl_status fxl_norm_weighted2(const double* weights, size_t n, fxl_norm** out);
FXL_API void fxl_norm_free(fxl_norm* norm);
FXL_API fxl_status fxl_norm_eval(const fxl_norm* norm, const double* x, size_t n, double* out);

FXL_API fxl_status fxl_gauge_linear(double slope, fxl_gauge** out);
FXL_API fxl_status fxl_gauge_power(double coeff, double exponent, fxl_gauge** out);
FXL_API fxl_status fxl_gauge_tabulated(const double* knots, const double* values, size_t n,
                                       fxl_gauge** out);
FXL_API void fxl_gauge_free(fxl_gauge* gauge);
FXL_API fxl_status fxl_gauge_eval(const fxl_gauge* gauge, double t, double* out);

/* ---- contractive-condition certification ----
 *
 * Samples are generated deterministically from (n_pairs, seed): all ordered
 * pairs of a small tensor grid over the domain, then seeded uniform pairs.
 * A null norm means the Euclidean norm.
 */

FXL_API fxl_status fxl_delta_from_zamfirescu(double a, double b, double c, double* out);
FXL_API fxl_status fxl_certify_zamfirescu(const fxl_map* map, const fxl_norm* norm, double a,
                                          double b, double c, size_t n_pairs, uint64_t seed,
                                          fxl_check** out);
FXL_API fxl_status fxl_certify_quasi_contractive(const fxl_map* map, const fxl_norm* norm,
                                                 double delta, size_t n_pairs, uint64_t seed,
                                                 fxl_check** out);
FXL_API fxl_status fxl_certify_osilike(const fxl_map* map, const fxl_norm* norm, double delta,
                                       double big_l, size_t n_pairs, uint64_t seed,
                                       fxl_check** out);
FXL_API fxl_status fxl_certify_contractive_like(const fxl_map* map, const fxl_norm* norm,
                                                double delta, const fxl_gauge* gauge,
                                                size_t n_pairs, uint64_t seed, fxl_check** out);
FXL_API void fxl_check_free(fxl_check* check);
FXL_API int fxl_check_certified(const fxl_check* check);
FXL_API const char* fxl_check_condition(const fxl_check* check);
FXL_API size_t fxl_check_sample_count(const fxl_check* check);
FXL_API double fxl_check_max_slack(const fxl_check* check);
FXL_API const char* fxl_check_json(const fxl_check* check);

/* Scans candidate points (n_candidates * dimension doubles) for fixed points
 * with residual <= residual_tol. Writes the unique hit to out_point and sets
 * *out_found; two hits further apart than 1e-8 under a certified check fail
 * with FXL_ERR_FIXED_POINT_CONTRADICTION. */
FXL_API fxl_status fxl_verify_unique_fixed_point(const fxl_map* map, const fxl_norm* norm,
                                                 const fxl_check* contractive_like_check,
                                                 const double* candidates, size_t n_candidates,
                                                 double residual_tol, double* out_point,
                                                 int* out_found);

/* ---- schedules and schemes ---- */

FXL_API fxl_status fxl_schedule_constant(double value, fxl_schedule** out);
FXL_API fxl_status fxl_schedule_harmonic(double offset, fxl_schedule** out);
FXL_API fxl_status fxl_schedule_list(const double* values, size_t n, fxl_schedule** out);
/* Declares the asserted lower bound A; emission below a positive floor fails. */
FXL_API fxl_status fxl_schedule_set_floor(fxl_schedule* schedule, double floor);
FXL_API void fxl_schedule_free(fxl_schedule* schedule);
FXL_API fxl_status fxl_schedule_value(const fxl_schedule* schedule, size_t n, double* out);

/* Families: picard, krasnoselskij, mann, ishikawa, new_two_step, noor, sp,
 * multistep, new_multistep, s_iteration. Named reductions fix their own k
 * (and Picard its alpha); the multistep families take k >= 2 with k - 1 beta
 * schedules. Schedules are copied into the scheme. */
FXL_API fxl_status fxl_scheme_create(const char* family, int k, const fxl_schedule* alpha,
                                     const fxl_schedule* const* betas, size_t n_betas,
                                     fxl_scheme** out);
/* The primitive multistep / new_multistep / s_iteration configuration a
 * named reduction stands for. */
FXL_API fxl_status fxl_scheme_expand(const fxl_scheme* scheme, fxl_scheme** out);
FXL_API void fxl_scheme_free(fxl_scheme* scheme);
FXL_API const char* fxl_scheme_family(const fxl_scheme* scheme);
FXL_API int fxl_scheme_k(const fxl_scheme* scheme);
FXL_API const char* fxl_scheme_to_json(const fxl_scheme* scheme);
FXL_API fxl_status fxl_scheme_from_json(const char* json_text, fxl_scheme** out);

/* ---- single runs ---- */

FXL_API fxl_status fxl_run(const fxl_map* map, const fxl_scheme* scheme, const double* x0,
                           const fxl_stopping* stopping, const fxl_norm* norm, int record_steps,
                           fxl_trajectory** out);
FXL_API void fxl_trajectory_free(fxl_trajectory* trajectory);
FXL_API size_t fxl_trajectory_length(const fxl_trajectory* trajectory); /* iterate count */
FXL_API fxl_status fxl_trajectory_point(const fxl_trajectory* trajectory, size_t n, double* out);
FXL_API fxl_status fxl_trajectory_residual(const fxl_trajectory* trajectory, size_t n,
                                           double* out);
FXL_API fxl_status fxl_trajectory_fp_distance(const fxl_trajectory* trajectory, size_t n,
                                              double* out);
FXL_API const char* fxl_trajectory_stop_reason(const fxl_trajectory* trajectory);
FXL_API const char* fxl_trajectory_csv(const fxl_trajectory* trajectory);

/* ---- recurrence diagnostics ----
 *
 * a has n + 1 entries, mu and rho have n entries (n >= 8). Verifies
 * a[i+1] <= (1 - mu[i]) a[i] + rho[i] + slack and reports finite-prefix
 * proxies for the vanishing-sequence hypotheses.
 */
FXL_API fxl_status fxl_check_recurrence(const double* a, const double* mu,
                                              const double* rho, size_t n, double slack,
                                              fxl_recurrence_verdict** out);
FXL_API void fxl_recurrence_verdict_free(fxl_recurrence_verdict* verdict);
FXL_API int fxl_recurrence_verdict_recurrence_holds(const fxl_recurrence_verdict* verdict);
FXL_API int fxl_recurrence_verdict_consistent(const fxl_recurrence_verdict* verdict);
FXL_API double fxl_recurrence_verdict_mu_partial_sum(const fxl_recurrence_verdict* verdict);
FXL_API const char* fxl_recurrence_verdict_json(const fxl_recurrence_verdict* verdict);

/* Residual decay along a trajectory with a known fixed point:
 * ||x_n - T x_n|| <= (1 + delta) ||x_n - p||, per iterate. The intermediate
 * variant checks every recorded auxiliary level the same way and requires a
 * trajectory run with record_steps. */
FXL_API fxl_status fxl_residual_decay_bound(const fxl_trajectory* trajectory, double delta,
                                            fxl_audit** out);
FXL_API fxl_status fxl_intermediate_residual_bound(const fxl_trajectory* trajectory,
                                                   const fxl_norm* norm, double delta,
                                                   fxl_audit** out);

/* ---- coupled runs and equivalence audits ---- */

/* Advances both schemes in lockstep from x0; requires structurally equal
 * alpha schedules with declared floor A > 0. */
FXL_API fxl_status fxl_couple(const fxl_map* map, const fxl_scheme* reference,
                              const fxl_scheme* target, const double* x0,
                              const fxl_stopping* stopping, const fxl_norm* norm,
                              fxl_coupled** out);
FXL_API void fxl_coupled_free(fxl_coupled* coupled);
FXL_API size_t fxl_coupled_length(const fxl_coupled* coupled);
FXL_API fxl_status fxl_coupled_gap(const fxl_coupled* coupled, size_t n, double* out);
FXL_API double fxl_coupled_gap_tail_max(const fxl_coupled* coupled);
FXL_API const char* fxl_coupled_outcome(const fxl_coupled* coupled);
/* Borrowed handles; valid while the coupled run lives. */
FXL_API const fxl_trajectory* fxl_coupled_reference(const fxl_coupled* coupled);
FXL_API const fxl_trajectory* fxl_coupled_target(const fxl_coupled* coupled);
FXL_API const char* fxl_coupled_csv(const fxl_coupled* coupled);

FXL_API fxl_status fxl_audit_new_multistep_forward(const fxl_coupled* coupled, double delta,
                                                   const fxl_gauge* gauge, fxl_audit** out);
FXL_API fxl_status fxl_audit_new_multistep_backward(const fxl_coupled* coupled, double delta,
                                                    const fxl_gauge* gauge, fxl_audit** out);
FXL_API fxl_status fxl_audit_s_iteration_forward(const fxl_coupled* coupled, double delta,
                                                 const fxl_gauge* gauge, fxl_audit** out);
FXL_API fxl_status fxl_audit_s_iteration_backward(const fxl_coupled* coupled, double delta,
                                                  const fxl_gauge* gauge, fxl_audit** out);
FXL_API void fxl_audit_free(fxl_audit* audit);
FXL_API const char* fxl_audit_inequality(const fxl_audit* audit);
FXL_API size_t fxl_audit_length(const fxl_audit* audit);
FXL_API fxl_status fxl_audit_lhs(const fxl_audit* audit, size_t n, double* out);
FXL_API fxl_status fxl_audit_rhs(const fxl_audit* audit, size_t n, double* out);
FXL_API fxl_status fxl_audit_slack(const fxl_audit* audit, size_t n, double* out);
FXL_API long long fxl_audit_first_violation(const fxl_audit* audit); /* -1 when clean */
FXL_API size_t fxl_audit_violations(const fxl_audit* audit);
FXL_API double fxl_audit_min_slack(const fxl_audit* audit);
FXL_API const char* fxl_audit_json(const fxl_audit* audit);

/* ---- ten-scheme equivalence suite ----
 *
 * Runs Picard, Krasnoselskij, Mann, Ishikawa, new two-step, Noor, SP,
 * multistep, new multistep and S-iteration from one x0, couples each against
 * a Mann reference sharing its alpha, audits the covered pairings, and
 * passes iff every scheme lands within fp_tol of the common fixed point.
 * alpha must be constant with floor > 0; beta fills every auxiliary level of
 * the multistep families (which use k). FIXPOINT_LAB_THREADS caps the number
 * of parallel rows.
 */
FXL_API fxl_status fxl_suite_run(const fxl_map* map, const double* x0,
                                 const fxl_schedule* alpha, const fxl_schedule* beta, int k,
                                 const fxl_stopping* stopping, const fxl_norm* norm, double delta,
                                 const fxl_gauge* gauge, double fp_tol, fxl_suite** out);
FXL_API void fxl_suite_free(fxl_suite* suite);
FXL_API size_t fxl_suite_rows(const fxl_suite* suite);
FXL_API const char* fxl_suite_scheme(const fxl_suite* suite, size_t row);
FXL_API double fxl_suite_fp_error(const fxl_suite* suite, size_t row);
FXL_API double fxl_suite_gap_tail(const fxl_suite* suite, size_t row);
FXL_API size_t fxl_suite_iterations(const fxl_suite* suite, size_t row);
FXL_API const char* fxl_suite_stop_reason(const fxl_suite* suite, size_t row);
FXL_API size_t fxl_suite_audit_violations(const fxl_suite* suite, size_t row);
FXL_API int fxl_suite_pass(const fxl_suite* suite);
FXL_API const char* fxl_suite_csv(const fxl_suite* suite);
FXL_API const char* fxl_suite_json(const fxl_suite* suite);

#ifdef __cplusplus
}
#endif

#endif /* FIXPOINTLAB_H */
