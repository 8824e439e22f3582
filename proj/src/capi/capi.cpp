#include "fixpointlab.h"

#include <cstring>
#include <memory>
#include <string>

#include "fxl/audits.hpp"
#include "fxl/conditions.hpp"
#include "fxl/convergence.hpp"
#include "fxl/coupled.hpp"
#include "fxl/mapping.hpp"
#include "fxl/sampling.hpp"
#include "fxl/schemes.hpp"
#include "fxl/serialize.hpp"
#include "fxl/suite.hpp"

// Handle definitions. Handles own copies of core values; fxl_map is a view
// into its corpus and stays valid while the corpus lives.

struct fxl_map {
  const fxl::Mapping* map;
};

struct fxl_corpus {
  fxl::Corpus corpus;
  std::vector<fxl_map> views;
};

struct fxl_norm {
  fxl::Norm value;
};

struct fxl_gauge {
  fxl::Gauge value;
};

struct fxl_schedule {
  fxl::ParameterSchedule value;
};

struct fxl_scheme {
  fxl::SchemeConfig value;
  mutable std::string json;
};

struct fxl_check {
  fxl::ConditionCheck value;
  std::string map_label;
  mutable std::string json;
};

struct fxl_trajectory {
  fxl::Trajectory value;
  mutable std::string csv;
};

struct fxl_coupled {
  fxl::CoupledRun run;
  mutable std::unique_ptr<fxl_trajectory> reference_view;
  mutable std::unique_ptr<fxl_trajectory> target_view;
  mutable std::string csv;
};

struct fxl_audit {
  fxl::AuditReport value;
  std::string label;
  mutable std::string json;
};

struct fxl_recurrence_verdict {
  fxl::RecurrenceVerdict value;
  mutable std::string json;
};

struct fxl_suite {
  fxl::SuiteResult value;
  std::string map_label;
  mutable std::string csv;
  mutable std::string json;
};

namespace {

thread_local std::string g_last_error;

fxl_status status_from(fxl::ErrorCode code) {
  using EC = fxl::ErrorCode;
  switch (code) {
    case EC::invalid_argument: return FXL_ERR_INVALID_ARGUMENT;
    case EC::io: return FXL_ERR_IO;
    case EC::parse: return FXL_ERR_PARSE;
    case EC::domain_escape: return FXL_ERR_DOMAIN_ESCAPE;
    case EC::invalid_constants: return FXL_ERR_INVALID_CONSTANTS;
    case EC::non_finite_value: return FXL_ERR_NON_FINITE_VALUE;
    case EC::missing_fixed_point: return FXL_ERR_MISSING_FIXED_POINT;
    case EC::schedule_floor_violated: return FXL_ERR_SCHEDULE_FLOOR_VIOLATED;
    case EC::scheme_mismatch: return FXL_ERR_SCHEME_MISMATCH;
    case EC::malformed_witness: return FXL_ERR_MALFORMED_WITNESS;
    case EC::unknown_family: return FXL_ERR_UNKNOWN_FAMILY;
    case EC::fixed_point_contradiction: return FXL_ERR_FIXED_POINT_CONTRADICTION;
  }
  return FXL_ERR_INTERNAL;
}

template <typename Fn>
fxl_status guarded(Fn&& fn) {
  try {
    fn();
    return FXL_OK;
  } catch (const fxl::Error& e) {
    g_last_error = e.what();
    return status_from(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return FXL_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown failure";
    return FXL_ERR_INTERNAL;
  }
}

fxl_status invalid(const char* message) {
  g_last_error = message;
  return FXL_ERR_INVALID_ARGUMENT;
}

const fxl::Norm& norm_or_euclidean(const fxl_norm* norm) {
  static const fxl::Norm euclidean = fxl::Norm::euclidean();
  return norm ? norm->value : euclidean;
}

fxl::Stopping stopping_or_default(const fxl_stopping* stopping) {
  if (!stopping) return fxl::Stopping{};
  return fxl::Stopping{stopping->tol, stopping->max_iters, stopping->divergence_bound};
}

fxl_status make_check(const fxl_map* map, fxl_check** out, fxl::ConditionCheck check) {
  auto* handle = new fxl_check{std::move(check), map->map->label(), {}};
  *out = handle;
  return FXL_OK;
}

}  // namespace

extern "C" {

const char* fxl_status_name(fxl_status status) {
  switch (status) {
    case FXL_OK: return "ok";
    case FXL_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case FXL_ERR_IO: return "io";
    case FXL_ERR_PARSE: return "parse";
    case FXL_ERR_DOMAIN_ESCAPE: return "domain_escape";
    case FXL_ERR_INVALID_CONSTANTS: return "invalid_constants";
    case FXL_ERR_NON_FINITE_VALUE: return "non_finite_value";
    case FXL_ERR_MISSING_FIXED_POINT: return "missing_fixed_point";
    case FXL_ERR_SCHEDULE_FLOOR_VIOLATED: return "schedule_floor_violated";
    case FXL_ERR_SCHEME_MISMATCH: return "scheme_mismatch";
    case FXL_ERR_MALFORMED_WITNESS: return "malformed_witness";
    case FXL_ERR_UNKNOWN_FAMILY: return "unknown_family";
    case FXL_ERR_FIXED_POINT_CONTRADICTION: return "fixed_point_contradiction";
    case FXL_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* fxl_last_error(void) { return g_last_error.c_str(); }

fxl_stopping fxl_stopping_default(void) { return fxl_stopping{1e-10, 10000, 1e12}; }

/* ---- corpus ---- */

static fxl_corpus* wrap_corpus(fxl::Corpus corpus) {
  auto* handle = new fxl_corpus{std::move(corpus), {}};
  handle->views.reserve(handle->corpus.maps.size());
  for (const fxl::Mapping& m : handle->corpus.maps) handle->views.push_back(fxl_map{&m});
  return handle;
}

fxl_status fxl_corpus_load(const char* path, fxl_corpus** out) {
  if (!path || !out) return invalid("fxl_corpus_load: null argument");
  return guarded([&] { *out = wrap_corpus(fxl::load_corpus(path)); });
}

fxl_status fxl_corpus_parse(const char* json_text, fxl_corpus** out) {
  if (!json_text || !out) return invalid("fxl_corpus_parse: null argument");
  return guarded([&] { *out = wrap_corpus(fxl::parse_corpus(json_text)); });
}

void fxl_corpus_free(fxl_corpus* corpus) { delete corpus; }

size_t fxl_corpus_size(const fxl_corpus* corpus) { return corpus ? corpus->corpus.maps.size() : 0; }

const char* fxl_corpus_label(const fxl_corpus* corpus, size_t index) {
  if (!corpus || index >= corpus->corpus.maps.size()) return nullptr;
  return corpus->corpus.maps[index].label().c_str();
}

fxl_status fxl_corpus_map(const fxl_corpus* corpus, const char* label, const fxl_map** out) {
  if (!corpus || !label || !out) return invalid("fxl_corpus_map: null argument");
  return guarded([&] {
    const fxl::Mapping& m = corpus->corpus.at(label);
    for (const fxl_map& view : corpus->views) {
      if (view.map == &m) {
        *out = &view;
        return;
      }
    }
    fxl::raise(fxl::ErrorCode::invalid_argument, "corpus view table out of sync");
  });
}

size_t fxl_map_dimension(const fxl_map* map) { return map ? map->map->dimension() : 0; }

const char* fxl_map_label(const fxl_map* map) { return map ? map->map->label().c_str() : nullptr; }

int fxl_map_has_fixed_point(const fxl_map* map) {
  return map && map->map->known_fixed_point() ? 1 : 0;
}

fxl_status fxl_map_fixed_point(const fxl_map* map, double* out) {
  if (!map || !out) return invalid("fxl_map_fixed_point: null argument");
  return guarded([&] {
    const auto& fp = map->map->known_fixed_point();
    if (!fp)
      fxl::raise(fxl::ErrorCode::missing_fixed_point,
                 map->map->label() + ": no known fixed point");
    std::memcpy(out, fp->data(), fp->size() * sizeof(double));
  });
}

fxl_status fxl_map_domain(const fxl_map* map, double* lo, double* hi) {
  if (!map || !lo || !hi) return invalid("fxl_map_domain: null argument");
  const fxl::Box& box = map->map->domain();
  std::memcpy(lo, box.lo.data(), box.lo.size() * sizeof(double));
  std::memcpy(hi, box.hi.data(), box.hi.size() * sizeof(double));
  return FXL_OK;
}

fxl_status fxl_map_eval(const fxl_map* map, const double* x, double* out) {
  if (!map || !x || !out) return invalid("fxl_map_eval: null argument");
  return guarded([&] {
    fxl::Vec image = map->map->evaluate(std::span<const double>(x, map->map->dimension()));
    std::memcpy(out, image.data(), image.size() * sizeof(double));
  });
}

/* ---- norms and gauges ---- */

fxl_status fxl_norm_p(double p, fxl_norm** out) {
  if (!out) return invalid("fxl_norm_p: null argument");
  return guarded([&] { *out = new fxl_norm{fxl::Norm::p_norm(p)}; });
}

fxl_status fxl_norm_weighted2(const double* weights, size_t n, fxl_norm** out) {
  if (!weights || !out) return invalid("fxl_norm_weighted2: null argument");
  return guarded([&] { *out = new fxl_norm{fxl::Norm::weighted_two(fxl::Vec(weights, weights + n))}; });
}

void fxl_norm_free(fxl_norm* norm) { delete norm; }

fxl_status fxl_norm_eval(const fxl_norm* norm, const double* x, size_t n, double* out) {
  if (!norm || !x || !out) return invalid("fxl_norm_eval: null argument");
  return guarded([&] { *out = norm->value(std::span<const double>(x, n)); });
}

fxl_status fxl_gauge_linear(double slope, fxl_gauge** out) {
  if (!out) return invalid("fxl_gauge_linear: null argument");
  return guarded([&] { *out = new fxl_gauge{fxl::Gauge::linear(slope)}; });
}

fxl_status fxl_gauge_power(double coeff, double exponent, fxl_gauge** out) {
  if (!out) return invalid("fxl_gauge_power: null argument");
  return guarded([&] { *out = new fxl_gauge{fxl::Gauge::power(coeff, exponent)}; });
}

fxl_status fxl_gauge_tabulated(const double* knots, const double* values, size_t n,
                               fxl_gauge** out) {
  if (!knots || !values || !out) return invalid("fxl_gauge_tabulated: null argument");
  return guarded([&] {
    *out = new fxl_gauge{
        fxl::Gauge::tabulated(fxl::Vec(knots, knots + n), fxl::Vec(values, values + n))};
  });
}

void fxl_gauge_free(fxl_gauge* gauge) { delete gauge; }

fxl_status fxl_gauge_eval(const fxl_gauge* gauge, double t, double* out) {
  if (!gauge || !out) return invalid("fxl_gauge_eval: null argument");
  return guarded([&] { *out = gauge->value(t); });
}

/* ---- condition certification ---- */

fxl_status fxl_delta_from_zamfirescu(double a, double b, double c, double* out) {
  if (!out) return invalid("fxl_delta_from_zamfirescu: null argument");
  return guarded([&] { *out = fxl::delta_from_zamfirescu(a, b, c); });
}

fxl_status fxl_certify_zamfirescu(const fxl_map* map, const fxl_norm* norm, double a, double b,
                                  double c, size_t n_pairs, uint64_t seed, fxl_check** out) {
  if (!map || !out) return invalid("fxl_certify_zamfirescu: null argument");
  return guarded([&] {
    auto samples = fxl::sample_pairs(map->map->domain(), n_pairs, seed);
    make_check(map, out,
               fxl::check_zamfirescu(*map->map, norm_or_euclidean(norm), {a, b, c}, samples));
  });
}

fxl_status fxl_certify_quasi_contractive(const fxl_map* map, const fxl_norm* norm, double delta,
                                         size_t n_pairs, uint64_t seed, fxl_check** out) {
  if (!map || !out) return invalid("fxl_certify_quasi_contractive: null argument");
  return guarded([&] {
    auto samples = fxl::sample_pairs(map->map->domain(), n_pairs, seed);
    make_check(map, out,
               fxl::check_quasi_contractive(*map->map, norm_or_euclidean(norm), delta, samples));
  });
}

fxl_status fxl_certify_osilike(const fxl_map* map, const fxl_norm* norm, double delta,
                               double big_l, size_t n_pairs, uint64_t seed, fxl_check** out) {
  if (!map || !out) return invalid("fxl_certify_osilike: null argument");
  return guarded([&] {
    auto samples = fxl::sample_pairs(map->map->domain(), n_pairs, seed);
    make_check(map, out,
               fxl::check_osilike(*map->map, norm_or_euclidean(norm), delta, big_l, samples));
  });
}

fxl_status fxl_certify_contractive_like(const fxl_map* map, const fxl_norm* norm, double delta,
                                        const fxl_gauge* gauge, size_t n_pairs, uint64_t seed,
                                        fxl_check** out) {
  if (!map || !gauge || !out) return invalid("fxl_certify_contractive_like: null argument");
  return guarded([&] {
    auto samples = fxl::sample_pairs(map->map->domain(), n_pairs, seed);
    make_check(map, out,
               fxl::check_contractive_like(*map->map, norm_or_euclidean(norm), delta,
                                           gauge->value, samples));
  });
}

void fxl_check_free(fxl_check* check) { delete check; }

int fxl_check_certified(const fxl_check* check) { return check && check->value.certified ? 1 : 0; }

const char* fxl_check_condition(const fxl_check* check) {
  return check ? fxl::condition_class_name(check->value.condition) : nullptr;
}

size_t fxl_check_sample_count(const fxl_check* check) {
  return check ? check->value.sample_count : 0;
}

double fxl_check_max_slack(const fxl_check* check) { return check ? check->value.max_slack : 0.0; }

const char* fxl_check_json(const fxl_check* check) {
  if (!check) return nullptr;
  if (check->json.empty())
    check->json = fxl::condition_check_json(check->value, check->map_label);
  return check->json.c_str();
}

fxl_status fxl_verify_unique_fixed_point(const fxl_map* map, const fxl_norm* norm,
                                         const fxl_check* contractive_like_check,
                                         const double* candidates, size_t n_candidates,
                                         double residual_tol, double* out_point, int* out_found) {
  if (!map || !contractive_like_check || !candidates || !out_point || !out_found)
    return invalid("fxl_verify_unique_fixed_point: null argument");
  return guarded([&] {
    const std::size_t d = map->map->dimension();
    std::vector<fxl::Vec> points(n_candidates);
    for (size_t i = 0; i < n_candidates; ++i)
      points[i].assign(candidates + i * d, candidates + (i + 1) * d);
    auto found = fxl::verify_unique_fixed_point(*map->map, norm_or_euclidean(norm),
                                                contractive_like_check->value, points,
                                                residual_tol);
    *out_found = found ? 1 : 0;
    if (found) std::memcpy(out_point, found->data(), d * sizeof(double));
  });
}

/* ---- schedules and schemes ---- */

fxl_status fxl_schedule_constant(double value, fxl_schedule** out) {
  if (!out) return invalid("fxl_schedule_constant: null argument");
  return guarded([&] { *out = new fxl_schedule{fxl::ParameterSchedule::constant(value)}; });
}

fxl_status fxl_schedule_harmonic(double offset, fxl_schedule** out) {
  if (!out) return invalid("fxl_schedule_harmonic: null argument");
  return guarded([&] { *out = new fxl_schedule{fxl::ParameterSchedule::harmonic(offset)}; });
}

fxl_status fxl_schedule_list(const double* values, size_t n, fxl_schedule** out) {
  if (!values || !out || n == 0) return invalid("fxl_schedule_list: null or empty argument");
  return guarded([&] {
    *out = new fxl_schedule{fxl::ParameterSchedule::list(fxl::Vec(values, values + n))};
  });
}

fxl_status fxl_schedule_set_floor(fxl_schedule* schedule, double floor) {
  if (!schedule) return invalid("fxl_schedule_set_floor: null argument");
  return guarded([&] {
    const fxl::ParameterSchedule& s = schedule->value;
    switch (s.kind()) {
      case fxl::ParameterSchedule::Kind::constant:
        schedule->value = fxl::ParameterSchedule::constant(s.constant_value(), floor);
        break;
      case fxl::ParameterSchedule::Kind::harmonic:
        schedule->value = fxl::ParameterSchedule::harmonic(s.harmonic_offset(), floor);
        break;
      case fxl::ParameterSchedule::Kind::list:
        schedule->value = fxl::ParameterSchedule::list(s.values(), floor);
        break;
    }
  });
}

void fxl_schedule_free(fxl_schedule* schedule) { delete schedule; }

fxl_status fxl_schedule_value(const fxl_schedule* schedule, size_t n, double* out) {
  if (!schedule || !out) return invalid("fxl_schedule_value: null argument");
  return guarded([&] { *out = schedule->value.value(n); });
}

fxl_status fxl_scheme_create(const char* family, int k, const fxl_schedule* alpha,
                             const fxl_schedule* const* betas, size_t n_betas, fxl_scheme** out) {
  if (!family || !out) return invalid("fxl_scheme_create: null argument");
  return guarded([&] {
    fxl::Family f = fxl::family_from_name(family);
    if (f == fxl::Family::picard && !alpha && n_betas == 0) {
      *out = new fxl_scheme{fxl::make_scheme(fxl::Family::picard), {}};
      return;
    }
    if (!alpha) fxl::raise(fxl::ErrorCode::invalid_argument, "scheme requires an alpha schedule");
    std::vector<fxl::ParameterSchedule> beta_values;
    beta_values.reserve(n_betas);
    for (size_t i = 0; i < n_betas; ++i) {
      if (!betas || !betas[i])
        fxl::raise(fxl::ErrorCode::invalid_argument, "null beta schedule handle");
      beta_values.push_back(betas[i]->value);
    }
    *out = new fxl_scheme{fxl::make_scheme(f, alpha->value, beta_values, k), {}};
  });
}

fxl_status fxl_scheme_expand(const fxl_scheme* scheme, fxl_scheme** out) {
  if (!scheme || !out) return invalid("fxl_scheme_expand: null argument");
  return guarded([&] { *out = new fxl_scheme{fxl::expand_reduction(scheme->value), {}}; });
}

void fxl_scheme_free(fxl_scheme* scheme) { delete scheme; }

const char* fxl_scheme_family(const fxl_scheme* scheme) {
  return scheme ? fxl::family_name(scheme->value.family) : nullptr;
}

int fxl_scheme_k(const fxl_scheme* scheme) { return scheme ? scheme->value.k : 0; }

const char* fxl_scheme_to_json(const fxl_scheme* scheme) {
  if (!scheme) return nullptr;
  if (scheme->json.empty()) scheme->json = fxl::scheme_json(scheme->value);
  return scheme->json.c_str();
}

fxl_status fxl_scheme_from_json(const char* json_text, fxl_scheme** out) {
  if (!json_text || !out) return invalid("fxl_scheme_from_json: null argument");
  return guarded([&] { *out = new fxl_scheme{fxl::scheme_from_json(json_text), {}}; });
}

/* ---- runs ---- */

fxl_status fxl_run(const fxl_map* map, const fxl_scheme* scheme, const double* x0,
                   const fxl_stopping* stopping, const fxl_norm* norm, int record_steps,
                   fxl_trajectory** out) {
  if (!map || !scheme || !x0 || !out) return invalid("fxl_run: null argument");
  return guarded([&] {
    fxl::Trajectory traj =
        fxl::run(*map->map, scheme->value, std::span<const double>(x0, map->map->dimension()),
                 stopping_or_default(stopping), norm_or_euclidean(norm), record_steps != 0);
    *out = new fxl_trajectory{std::move(traj), {}};
  });
}

void fxl_trajectory_free(fxl_trajectory* trajectory) { delete trajectory; }

size_t fxl_trajectory_length(const fxl_trajectory* trajectory) {
  return trajectory ? trajectory->value.length() : 0;
}

fxl_status fxl_trajectory_point(const fxl_trajectory* trajectory, size_t n, double* out) {
  if (!trajectory || !out) return invalid("fxl_trajectory_point: null argument");
  if (n >= trajectory->value.length()) return invalid("fxl_trajectory_point: index out of range");
  const fxl::Vec& p = trajectory->value.iterates[n];
  std::memcpy(out, p.data(), p.size() * sizeof(double));
  return FXL_OK;
}

fxl_status fxl_trajectory_residual(const fxl_trajectory* trajectory, size_t n, double* out) {
  if (!trajectory || !out) return invalid("fxl_trajectory_residual: null argument");
  if (n >= trajectory->value.length())
    return invalid("fxl_trajectory_residual: index out of range");
  *out = trajectory->value.residuals[n];
  return FXL_OK;
}

fxl_status fxl_trajectory_fp_distance(const fxl_trajectory* trajectory, size_t n, double* out) {
  if (!trajectory || !out) return invalid("fxl_trajectory_fp_distance: null argument");
  if (n >= trajectory->value.length())
    return invalid("fxl_trajectory_fp_distance: index out of range");
  if (!trajectory->value.fixed_point_known) {
    g_last_error = "trajectory has no known fixed point";
    return FXL_ERR_MISSING_FIXED_POINT;
  }
  *out = trajectory->value.fp_distances[n];
  return FXL_OK;
}

const char* fxl_trajectory_stop_reason(const fxl_trajectory* trajectory) {
  return trajectory ? fxl::stop_reason_name(trajectory->value.stop_reason) : nullptr;
}

const char* fxl_trajectory_csv(const fxl_trajectory* trajectory) {
  if (!trajectory) return nullptr;
  if (trajectory->csv.empty()) trajectory->csv = fxl::trajectory_csv(trajectory->value);
  return trajectory->csv.c_str();
}

/* ---- recurrence diagnostics ---- */

fxl_status fxl_check_recurrence(const double* a, const double* mu, const double* rho,
                                      size_t n, double slack, fxl_recurrence_verdict** out) {
  if (!a || !mu || !rho || !out) return invalid("fxl_check_recurrence: null argument");
  return guarded([&] {
    fxl::RecurrenceWitness witness{fxl::Vec(a, a + n + 1), fxl::Vec(mu, mu + n),
                                   fxl::Vec(rho, rho + n)};
    *out = new fxl_recurrence_verdict{fxl::check_recurrence(witness, slack), {}};
  });
}

void fxl_recurrence_verdict_free(fxl_recurrence_verdict* verdict) { delete verdict; }

int fxl_recurrence_verdict_recurrence_holds(const fxl_recurrence_verdict* verdict) {
  return verdict && verdict->value.recurrence_holds ? 1 : 0;
}

int fxl_recurrence_verdict_consistent(const fxl_recurrence_verdict* verdict) {
  return verdict && verdict->value.consistent ? 1 : 0;
}

double fxl_recurrence_verdict_mu_partial_sum(const fxl_recurrence_verdict* verdict) {
  return verdict ? verdict->value.mu_partial_sum : 0.0;
}

const char* fxl_recurrence_verdict_json(const fxl_recurrence_verdict* verdict) {
  if (!verdict) return nullptr;
  if (verdict->json.empty())
    verdict->json = fxl::recurrence_verdict_json(verdict->value, "recurrence_witness");
  return verdict->json.c_str();
}

static fxl_audit* wrap_audit(fxl::AuditReport report, std::string label) {
  return new fxl_audit{std::move(report), std::move(label), {}};
}

fxl_status fxl_residual_decay_bound(const fxl_trajectory* trajectory, double delta,
                                    fxl_audit** out) {
  if (!trajectory || !out) return invalid("fxl_residual_decay_bound: null argument");
  return guarded([&] {
    *out = wrap_audit(fxl::residual_decay_bound(trajectory->value, delta),
                      fxl::family_name(trajectory->value.scheme.family));
  });
}

fxl_status fxl_intermediate_residual_bound(const fxl_trajectory* trajectory, const fxl_norm* norm,
                                           double delta, fxl_audit** out) {
  if (!trajectory || !out) return invalid("fxl_intermediate_residual_bound: null argument");
  return guarded([&] {
    *out = wrap_audit(
        fxl::intermediate_residual_bound(trajectory->value, norm_or_euclidean(norm), delta),
        fxl::family_name(trajectory->value.scheme.family));
  });
}

/* ---- coupled runs and audits ---- */

fxl_status fxl_couple(const fxl_map* map, const fxl_scheme* reference, const fxl_scheme* target,
                      const double* x0, const fxl_stopping* stopping, const fxl_norm* norm,
                      fxl_coupled** out) {
  if (!map || !reference || !target || !x0 || !out) return invalid("fxl_couple: null argument");
  return guarded([&] {
    fxl::CoupledRun run = fxl::couple(*map->map, reference->value, target->value,
                                      std::span<const double>(x0, map->map->dimension()),
                                      stopping_or_default(stopping), norm_or_euclidean(norm));
    *out = new fxl_coupled{std::move(run), nullptr, nullptr, {}};
  });
}

void fxl_coupled_free(fxl_coupled* coupled) { delete coupled; }

size_t fxl_coupled_length(const fxl_coupled* coupled) { return coupled ? coupled->run.length() : 0; }

fxl_status fxl_coupled_gap(const fxl_coupled* coupled, size_t n, double* out) {
  if (!coupled || !out) return invalid("fxl_coupled_gap: null argument");
  if (n >= coupled->run.length()) return invalid("fxl_coupled_gap: index out of range");
  *out = coupled->run.gap[n];
  return FXL_OK;
}

double fxl_coupled_gap_tail_max(const fxl_coupled* coupled) {
  return coupled ? coupled->run.gap_tail_max() : 0.0;
}

const char* fxl_coupled_outcome(const fxl_coupled* coupled) {
  return coupled ? fxl::couple_outcome_name(coupled->run.outcome) : nullptr;
}

const fxl_trajectory* fxl_coupled_reference(const fxl_coupled* coupled) {
  if (!coupled) return nullptr;
  if (!coupled->reference_view)
    coupled->reference_view.reset(new fxl_trajectory{coupled->run.reference, {}});
  return coupled->reference_view.get();
}

const fxl_trajectory* fxl_coupled_target(const fxl_coupled* coupled) {
  if (!coupled) return nullptr;
  if (!coupled->target_view)
    coupled->target_view.reset(new fxl_trajectory{coupled->run.target, {}});
  return coupled->target_view.get();
}

const char* fxl_coupled_csv(const fxl_coupled* coupled) {
  if (!coupled) return nullptr;
  if (coupled->csv.empty()) coupled->csv = fxl::coupled_csv(coupled->run);
  return coupled->csv.c_str();
}

static std::string audit_label(const fxl_coupled* coupled) {
  return std::string(fxl::family_name(coupled->run.reference.scheme.family)) + "_vs_" +
         fxl::family_name(coupled->run.target.scheme.family);
}

fxl_status fxl_audit_new_multistep_forward(const fxl_coupled* coupled, double delta,
                                           const fxl_gauge* gauge, fxl_audit** out) {
  if (!coupled || !gauge || !out) return invalid("fxl_audit_new_multistep_forward: null argument");
  return guarded([&] {
    *out = wrap_audit(fxl::audit_new_multistep_forward(coupled->run, delta, gauge->value,
                                                       fxl::Norm::euclidean()),
                      audit_label(coupled));
  });
}

fxl_status fxl_audit_new_multistep_backward(const fxl_coupled* coupled, double delta,
                                            const fxl_gauge* gauge, fxl_audit** out) {
  if (!coupled || !gauge || !out)
    return invalid("fxl_audit_new_multistep_backward: null argument");
  return guarded([&] {
    *out = wrap_audit(fxl::audit_new_multistep_backward(coupled->run, delta, gauge->value,
                                                        fxl::Norm::euclidean()),
                      audit_label(coupled));
  });
}

fxl_status fxl_audit_s_iteration_forward(const fxl_coupled* coupled, double delta,
                                         const fxl_gauge* gauge, fxl_audit** out) {
  if (!coupled || !gauge || !out) return invalid("fxl_audit_s_iteration_forward: null argument");
  return guarded([&] {
    *out = wrap_audit(fxl::audit_s_iteration_forward(coupled->run, delta, gauge->value,
                                                     fxl::Norm::euclidean()),
                      audit_label(coupled));
  });
}

fxl_status fxl_audit_s_iteration_backward(const fxl_coupled* coupled, double delta,
                                          const fxl_gauge* gauge, fxl_audit** out) {
  if (!coupled || !gauge || !out) return invalid("fxl_audit_s_iteration_backward: null argument");
  return guarded([&] {
    *out = wrap_audit(fxl::audit_s_iteration_backward(coupled->run, delta, gauge->value,
                                                      fxl::Norm::euclidean()),
                      audit_label(coupled));
  });
}

void fxl_audit_free(fxl_audit* audit) { delete audit; }

const char* fxl_audit_inequality(const fxl_audit* audit) {
  return audit ? audit->value.inequality.c_str() : nullptr;
}

size_t fxl_audit_length(const fxl_audit* audit) { return audit ? audit->value.size() : 0; }

fxl_status fxl_audit_lhs(const fxl_audit* audit, size_t n, double* out) {
  if (!audit || !out) return invalid("fxl_audit_lhs: null argument");
  if (n >= audit->value.size()) return invalid("fxl_audit_lhs: index out of range");
  *out = audit->value.lhs[n];
  return FXL_OK;
}

fxl_status fxl_audit_rhs(const fxl_audit* audit, size_t n, double* out) {
  if (!audit || !out) return invalid("fxl_audit_rhs: null argument");
  if (n >= audit->value.size()) return invalid("fxl_audit_rhs: index out of range");
  *out = audit->value.rhs[n];
  return FXL_OK;
}

fxl_status fxl_audit_slack(const fxl_audit* audit, size_t n, double* out) {
  if (!audit || !out) return invalid("fxl_audit_slack: null argument");
  if (n >= audit->value.size()) return invalid("fxl_audit_slack: index out of range");
  *out = audit->value.slack[n];
  return FXL_OK;
}

long long fxl_audit_first_violation(const fxl_audit* audit) {
  if (!audit || !audit->value.first_violation) return -1;
  return static_cast<long long>(*audit->value.first_violation);
}

size_t fxl_audit_violations(const fxl_audit* audit) {
  return audit ? audit->value.violation_count() : 0;
}

double fxl_audit_min_slack(const fxl_audit* audit) { return audit ? audit->value.min_slack : 0.0; }

const char* fxl_audit_json(const fxl_audit* audit) {
  if (!audit) return nullptr;
  if (audit->json.empty()) audit->json = fxl::audit_json(audit->value, audit->label);
  return audit->json.c_str();
}

/* ---- suite ---- */

fxl_status fxl_suite_run(const fxl_map* map, const double* x0, const fxl_schedule* alpha,
                         const fxl_schedule* beta, int k, const fxl_stopping* stopping,
                         const fxl_norm* norm, double delta, const fxl_gauge* gauge,
                         double fp_tol, fxl_suite** out) {
  if (!map || !x0 || !alpha || !beta || !gauge || !out)
    return invalid("fxl_suite_run: null argument");
  return guarded([&] {
    fxl::SuiteResult result = fxl::equivalence_suite(
        *map->map, std::span<const double>(x0, map->map->dimension()), alpha->value, beta->value,
        k, stopping_or_default(stopping), norm_or_euclidean(norm), delta, gauge->value, fp_tol);
    *out = new fxl_suite{std::move(result), map->map->label(), {}, {}};
  });
}

void fxl_suite_free(fxl_suite* suite) { delete suite; }

size_t fxl_suite_rows(const fxl_suite* suite) { return suite ? suite->value.rows.size() : 0; }

const char* fxl_suite_scheme(const fxl_suite* suite, size_t row) {
  if (!suite || row >= suite->value.rows.size()) return nullptr;
  return fxl::family_name(suite->value.rows[row].family);
}

double fxl_suite_fp_error(const fxl_suite* suite, size_t row) {
  if (!suite || row >= suite->value.rows.size()) return 0.0;
  return suite->value.rows[row].final_fp_error;
}

double fxl_suite_gap_tail(const fxl_suite* suite, size_t row) {
  if (!suite || row >= suite->value.rows.size()) return 0.0;
  return suite->value.rows[row].gap_tail;
}

size_t fxl_suite_iterations(const fxl_suite* suite, size_t row) {
  if (!suite || row >= suite->value.rows.size()) return 0;
  return suite->value.rows[row].iterations;
}

const char* fxl_suite_stop_reason(const fxl_suite* suite, size_t row) {
  if (!suite || row >= suite->value.rows.size()) return nullptr;
  return fxl::stop_reason_name(suite->value.rows[row].stop_reason);
}

size_t fxl_suite_audit_violations(const fxl_suite* suite, size_t row) {
  if (!suite || row >= suite->value.rows.size()) return 0;
  return suite->value.rows[row].audit_violations();
}

int fxl_suite_pass(const fxl_suite* suite) { return suite && suite->value.pass ? 1 : 0; }

const char* fxl_suite_csv(const fxl_suite* suite) {
  if (!suite) return nullptr;
  if (suite->csv.empty()) suite->csv = fxl::suite_csv(suite->value);
  return suite->csv.c_str();
}

const char* fxl_suite_json(const fxl_suite* suite) {
  if (!suite) return nullptr;
  if (suite->json.empty()) suite->json = fxl::suite_json(suite->value, suite->map_label);
  return suite->json.c_str();
}

}  // extern "C"
