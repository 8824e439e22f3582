// Exercises the shared-library C surface end to end: corpus loading, map
// evaluation, certification, schemes, runs, coupled audits, the recurrence
// checker and the suite, plus the error-code paths.

#include <cmath>
#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "fixpointlab.h"

namespace {

int g_failures = 0;

#define REQUIRE(cond)                                                        \
  do {                                                                       \
    if (!(cond)) {                                                           \
      std::fprintf(stderr, "[FAIL] %s:%d: %s\n", __FILE__, __LINE__, #cond); \
      ++g_failures;                                                          \
    }                                                                        \
  } while (0)

#define REQUIRE_OK(call) REQUIRE((call) == FXL_OK)

bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

}  // namespace

int main() {
  REQUIRE(std::strcmp(fxl_status_name(FXL_OK), "ok") == 0);
  REQUIRE(std::strcmp(fxl_status_name(FXL_ERR_DOMAIN_ESCAPE), "domain_escape") == 0);

  fxl_stopping defaults = fxl_stopping_default();
  REQUIRE(defaults.tol == 1e-10);
  REQUIRE(defaults.max_iters == 10000);

  // Corpus loading and lookup.
  fxl_corpus* corpus = nullptr;
  REQUIRE_OK(fxl_corpus_load(FXLAB_CORPUS_PATH, &corpus));
  REQUIRE(fxl_corpus_size(corpus) == 10);
  REQUIRE(fxl_corpus_label(corpus, 0) != nullptr);

  const fxl_map* missing = nullptr;
  REQUIRE(fxl_corpus_map(corpus, "nope", &missing) == FXL_ERR_INVALID_ARGUMENT);
  REQUIRE(std::strlen(fxl_last_error()) > 0);

  fxl_corpus* parsed_corpus = nullptr;
  REQUIRE_OK(fxl_corpus_parse(
      R"([{"label": "m", "dimension": 1, "domain": {"lo": [0], "hi": [1]},
           "kind": "affine", "parameters": {"matrix": [[0.5]], "offset": [0]}}])",
      &parsed_corpus));
  REQUIRE(fxl_corpus_size(parsed_corpus) == 1);
  fxl_corpus_free(parsed_corpus);
  REQUIRE(fxl_corpus_parse("not json", &parsed_corpus) == FXL_ERR_PARSE);

  const fxl_map* halving = nullptr;
  REQUIRE_OK(fxl_corpus_map(corpus, "scalar_halving", &halving));
  REQUIRE(fxl_map_dimension(halving) == 1);
  REQUIRE(std::strcmp(fxl_map_label(halving), "scalar_halving") == 0);
  REQUIRE(fxl_map_has_fixed_point(halving) == 1);
  double fp = -1.0;
  REQUIRE_OK(fxl_map_fixed_point(halving, &fp));
  REQUIRE(fp == 0.0);
  double lo = 0.0, hi = 0.0;
  REQUIRE_OK(fxl_map_domain(halving, &lo, &hi));
  REQUIRE(lo == 0.0);
  REQUIRE(hi == 1.0);
  double x = 1.0, image = 0.0;
  REQUIRE_OK(fxl_map_eval(halving, &x, &image));
  REQUIRE(image == 0.5);
  double outside = 2.0;
  REQUIRE(fxl_map_eval(halving, &outside, &image) == FXL_ERR_DOMAIN_ESCAPE);

  // Norms and gauges.
  fxl_norm* norm1 = nullptr;
  REQUIRE_OK(fxl_norm_p(1.0, &norm1));
  double v2[2] = {3.0, -4.0};
  double norm_value = 0.0;
  REQUIRE_OK(fxl_norm_eval(norm1, v2, 2, &norm_value));
  REQUIRE(norm_value == 7.0);
  fxl_norm_free(norm1);
  REQUIRE(fxl_norm_p(0.5, &norm1) == FXL_ERR_INVALID_ARGUMENT);

  fxl_gauge* gauge = nullptr;
  REQUIRE_OK(fxl_gauge_linear(1.0, &gauge));
  double gauge_value = 0.0;
  REQUIRE_OK(fxl_gauge_eval(gauge, 2.0, &gauge_value));
  REQUIRE(gauge_value == 2.0);
  fxl_gauge* bad_gauge = nullptr;
  REQUIRE(fxl_gauge_power(1.0, 0.5, &bad_gauge) == FXL_ERR_INVALID_CONSTANTS);

  // Certification.
  double delta = 0.0;
  REQUIRE_OK(fxl_delta_from_zamfirescu(0.5, 0.3, 0.4, &delta));
  REQUIRE(near(delta, 2.0 / 3.0, 1e-15));
  REQUIRE(fxl_delta_from_zamfirescu(1.5, 0.3, 0.4, &delta) == FXL_ERR_INVALID_CONSTANTS);

  fxl_check* zam = nullptr;
  REQUIRE_OK(fxl_certify_zamfirescu(halving, nullptr, 0.6, 0.3, 0.3, 2000, 42, &zam));
  REQUIRE(fxl_check_certified(zam) == 1);
  REQUIRE(std::strcmp(fxl_check_condition(zam), "zamfirescu") == 0);
  REQUIRE(fxl_check_sample_count(zam) == 2000);
  REQUIRE(fxl_check_max_slack(zam) >= 0.0);
  REQUIRE(std::string(fxl_check_json(zam)).find("\"certified\": true") != std::string::npos);

  const fxl_map* identity = nullptr;
  REQUIRE_OK(fxl_corpus_map(corpus, "identity_1d", &identity));
  fxl_check* refuted = nullptr;
  REQUIRE_OK(fxl_certify_quasi_contractive(identity, nullptr, 0.9, 500, 42, &refuted));
  REQUIRE(fxl_check_certified(refuted) == 0);

  fxl_check* gauge_check = nullptr;
  REQUIRE_OK(fxl_certify_contractive_like(halving, nullptr, 0.5, gauge, 1000, 42, &gauge_check));
  REQUIRE(fxl_check_certified(gauge_check) == 1);
  fxl_check* osilike = nullptr;
  REQUIRE_OK(fxl_certify_osilike(halving, nullptr, 0.5, 1.0, 1000, 42, &osilike));
  REQUIRE(fxl_check_certified(osilike) == 1);

  double candidates[3] = {0.0, 0.5, 1.0};
  double found_point = -1.0;
  int found = 0;
  REQUIRE_OK(fxl_verify_unique_fixed_point(halving, nullptr, gauge_check, candidates, 3, 1e-9,
                                           &found_point, &found));
  REQUIRE(found == 1);
  REQUIRE(found_point == 0.0);
  // A refuted check of the wrong class is rejected up front.
  REQUIRE(fxl_verify_unique_fixed_point(halving, nullptr, refuted, candidates, 3, 1e-9,
                                        &found_point, &found) == FXL_ERR_INVALID_ARGUMENT);

  // Schedules and schemes.
  fxl_schedule* alpha = nullptr;
  REQUIRE_OK(fxl_schedule_constant(0.5, &alpha));
  double alpha_value = 0.0;
  REQUIRE_OK(fxl_schedule_value(alpha, 17, &alpha_value));
  REQUIRE(alpha_value == 0.5);
  fxl_schedule* beta = nullptr;
  REQUIRE_OK(fxl_schedule_constant(0.5, &beta));

  fxl_schedule* floored = nullptr;
  REQUIRE_OK(fxl_schedule_harmonic(2.0, &floored));
  REQUIRE_OK(fxl_schedule_set_floor(floored, 0.25));
  REQUIRE_OK(fxl_schedule_value(floored, 2, &alpha_value));  // 1/4
  REQUIRE(fxl_schedule_value(floored, 3, &alpha_value) == FXL_ERR_SCHEDULE_FLOOR_VIOLATED);
  fxl_schedule_free(floored);

  const fxl_schedule* betas[2] = {beta, beta};
  fxl_scheme* new_multistep = nullptr;
  REQUIRE_OK(fxl_scheme_create("new_multistep", 3, alpha, betas, 2, &new_multistep));
  REQUIRE(std::strcmp(fxl_scheme_family(new_multistep), "new_multistep") == 0);
  REQUIRE(fxl_scheme_k(new_multistep) == 3);

  fxl_scheme* mann = nullptr;
  REQUIRE_OK(fxl_scheme_create("mann", 2, alpha, nullptr, 0, &mann));
  fxl_scheme* s_iter = nullptr;
  REQUIRE_OK(fxl_scheme_create("s_iteration", 2, alpha, betas, 1, &s_iter));
  fxl_scheme* bad_scheme = nullptr;
  REQUIRE(fxl_scheme_create("not_a_family", 2, alpha, nullptr, 0, &bad_scheme) ==
          FXL_ERR_UNKNOWN_FAMILY);

  fxl_scheme* picard = nullptr;
  REQUIRE_OK(fxl_scheme_create("picard", 2, nullptr, nullptr, 0, &picard));
  fxl_scheme* expanded = nullptr;
  REQUIRE_OK(fxl_scheme_expand(picard, &expanded));
  REQUIRE(std::strcmp(fxl_scheme_family(expanded), "multistep") == 0);

  std::string scheme_text = fxl_scheme_to_json(new_multistep);
  fxl_scheme* parsed = nullptr;
  REQUIRE_OK(fxl_scheme_from_json(scheme_text.c_str(), &parsed));
  REQUIRE(std::strcmp(fxl_scheme_family(parsed), "new_multistep") == 0);
  fxl_scheme_free(parsed);

  // Runs.
  double x0 = 1.0;
  fxl_trajectory* traj = nullptr;
  REQUIRE_OK(fxl_run(halving, picard, &x0, &defaults, nullptr, 0, &traj));
  REQUIRE(fxl_trajectory_length(traj) == 34);
  REQUIRE(std::strcmp(fxl_trajectory_stop_reason(traj), "tolerance") == 0);
  double point = -1.0, residual = -1.0, fp_distance = -1.0;
  REQUIRE_OK(fxl_trajectory_point(traj, 10, &point));
  REQUIRE(point == std::pow(0.5, 10));
  REQUIRE_OK(fxl_trajectory_residual(traj, 33, &residual));
  REQUIRE(residual <= 1e-10);
  REQUIRE_OK(fxl_trajectory_fp_distance(traj, 10, &fp_distance));
  REQUIRE(fp_distance == point);
  REQUIRE(fxl_trajectory_point(traj, 999, &point) == FXL_ERR_INVALID_ARGUMENT);
  REQUIRE(std::string(fxl_trajectory_csv(traj)).rfind("n,x0,residual,fp_distance\n", 0) == 0);

  fxl_audit* decay = nullptr;
  REQUIRE_OK(fxl_residual_decay_bound(traj, 0.5, &decay));
  REQUIRE(fxl_audit_violations(decay) == 0);
  REQUIRE(fxl_audit_first_violation(decay) == -1);
  fxl_audit_free(decay);

  fxl_trajectory* recorded = nullptr;
  REQUIRE_OK(fxl_run(halving, new_multistep, &x0, &defaults, nullptr, 1, &recorded));
  fxl_audit* level_decay = nullptr;
  REQUIRE_OK(fxl_intermediate_residual_bound(recorded, nullptr, 0.5, &level_decay));
  REQUIRE(fxl_audit_violations(level_decay) == 0);
  fxl_audit_free(level_decay);
  fxl_trajectory_free(recorded);

  // Recurrence diagnostics.
  {
    const size_t n = 32;
    std::vector<double> a(n + 1), mu(n, 0.5), rho(n);
    a[0] = 1.0;
    for (size_t i = 0; i < n; ++i) {
      rho[i] = std::pow(0.75, double(i));
      a[i + 1] = (1.0 - mu[i]) * a[i] + rho[i];
    }
    fxl_recurrence_verdict* verdict = nullptr;
    REQUIRE_OK(fxl_check_recurrence(a.data(), mu.data(), rho.data(), n, 0.0, &verdict));
    REQUIRE(fxl_recurrence_verdict_recurrence_holds(verdict) == 1);
    REQUIRE(fxl_recurrence_verdict_consistent(verdict) == 1);
    REQUIRE(near(fxl_recurrence_verdict_mu_partial_sum(verdict), 16.0, 1e-12));
    REQUIRE(std::string(fxl_recurrence_verdict_json(verdict)).find("\"consistent\": true") !=
            std::string::npos);
    fxl_recurrence_verdict_free(verdict);

    std::vector<double> bad_mu(n, 1.5);
    REQUIRE(fxl_check_recurrence(a.data(), bad_mu.data(), rho.data(), n, 0.0, &verdict) ==
            FXL_ERR_MALFORMED_WITNESS);
  }

  // Coupled runs and audits.
  fxl_coupled* coupled = nullptr;
  REQUIRE_OK(fxl_couple(halving, mann, new_multistep, &x0, &defaults, nullptr, &coupled));
  REQUIRE(fxl_coupled_length(coupled) > 10);
  REQUIRE(std::strcmp(fxl_coupled_outcome(coupled), "both_converged_same_p") == 0);
  double gap0 = -1.0;
  REQUIRE_OK(fxl_coupled_gap(coupled, 0, &gap0));
  REQUIRE(gap0 == 0.0);
  REQUIRE(fxl_coupled_gap_tail_max(coupled) < 1e-6);
  const fxl_trajectory* reference = fxl_coupled_reference(coupled);
  const fxl_trajectory* target = fxl_coupled_target(coupled);
  REQUIRE(fxl_trajectory_length(reference) == fxl_coupled_length(coupled));
  REQUIRE(fxl_trajectory_length(target) == fxl_coupled_length(coupled));
  REQUIRE(std::string(fxl_coupled_csv(coupled)).rfind("n,u0,x0,gap", 0) == 0);

  fxl_audit* forward = nullptr;
  REQUIRE_OK(fxl_audit_new_multistep_forward(coupled, 0.5, gauge, &forward));
  REQUIRE(std::strcmp(fxl_audit_inequality(forward), "mann_vs_new_multistep_forward") == 0);
  REQUIRE(fxl_audit_length(forward) == fxl_coupled_length(coupled) - 1);
  REQUIRE(fxl_audit_violations(forward) == 0);
  REQUIRE(fxl_audit_min_slack(forward) > 0.0);
  double lhs = -1.0, rhs = -1.0, slack = -1.0;
  REQUIRE_OK(fxl_audit_lhs(forward, 0, &lhs));
  REQUIRE_OK(fxl_audit_rhs(forward, 0, &rhs));
  REQUIRE_OK(fxl_audit_slack(forward, 0, &slack));
  REQUIRE(near(slack, rhs - lhs, 1e-18));
  REQUIRE(std::string(fxl_audit_json(forward)).find("mann_vs_new_multistep_forward") !=
          std::string::npos);
  fxl_audit_free(forward);

  fxl_audit* backward = nullptr;
  REQUIRE_OK(fxl_audit_new_multistep_backward(coupled, 0.5, gauge, &backward));
  REQUIRE(fxl_audit_violations(backward) == 0);
  fxl_audit_free(backward);

  fxl_audit* mismatched = nullptr;
  REQUIRE(fxl_audit_s_iteration_forward(coupled, 0.5, gauge, &mismatched) ==
          FXL_ERR_SCHEME_MISMATCH);

  fxl_coupled* s_coupled = nullptr;
  REQUIRE_OK(fxl_couple(halving, mann, s_iter, &x0, &defaults, nullptr, &s_coupled));
  fxl_audit* s_backward = nullptr;
  REQUIRE_OK(fxl_audit_s_iteration_backward(s_coupled, 0.5, gauge, &s_backward));
  REQUIRE(fxl_audit_violations(s_backward) == 0);
  fxl_audit_free(s_backward);
  fxl_coupled_free(s_coupled);

  // Suite.
  const fxl_map* affine = nullptr;
  REQUIRE_OK(fxl_corpus_map(corpus, "affine_2d", &affine));
  double x0_planar[2] = {0.0, 0.0};
  fxl_gauge* planar_gauge = nullptr;
  REQUIRE_OK(fxl_gauge_linear(1.8, &planar_gauge));
  fxl_suite* suite = nullptr;
  REQUIRE_OK(fxl_suite_run(affine, x0_planar, alpha, beta, 3, &defaults, nullptr, 0.9,
                           planar_gauge, 1e-7, &suite));
  REQUIRE(fxl_suite_rows(suite) == 10);
  REQUIRE(fxl_suite_pass(suite) == 1);
  REQUIRE(std::strcmp(fxl_suite_scheme(suite, 0), "picard") == 0);
  REQUIRE(std::strcmp(fxl_suite_scheme(suite, 9), "s_iteration") == 0);
  for (size_t row = 0; row < 10; ++row) {
    REQUIRE(fxl_suite_fp_error(suite, row) < 1e-7);
    REQUIRE(fxl_suite_gap_tail(suite, row) < 1e-6);
    REQUIRE(fxl_suite_iterations(suite, row) <= 10000);
    REQUIRE(std::strcmp(fxl_suite_stop_reason(suite, row), "tolerance") == 0);
    REQUIRE(fxl_suite_audit_violations(suite, row) == 0);
  }
  REQUIRE(std::string(fxl_suite_csv(suite)).rfind("scheme,", 0) == 0);
  REQUIRE(std::string(fxl_suite_json(suite)).find("\"pass\": true") != std::string::npos);
  fxl_suite_free(suite);
  fxl_gauge_free(planar_gauge);

  fxl_coupled_free(coupled);
  fxl_trajectory_free(traj);
  fxl_scheme_free(expanded);
  fxl_scheme_free(picard);
  fxl_scheme_free(s_iter);
  fxl_scheme_free(mann);
  fxl_scheme_free(new_multistep);
  fxl_schedule_free(beta);
  fxl_schedule_free(alpha);
  fxl_check_free(osilike);
  fxl_check_free(gauge_check);
  fxl_check_free(refuted);
  fxl_check_free(zam);
  fxl_gauge_free(gauge);
  fxl_corpus_free(corpus);

  if (g_failures == 0) std::printf("capi_tests: all checks passed\n");
  return g_failures == 0 ? 0 : 1;
}
