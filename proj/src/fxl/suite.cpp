#include "fxl/suite.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <future>
#include <thread>

namespace fxl {

namespace {

constexpr std::array<Family, 10> kSuiteFamilies = {
    Family::picard,       Family::krasnoselskij, Family::mann,      Family::ishikawa,
    Family::new_two_step, Family::noor,          Family::sp,        Family::multistep,
    Family::new_multistep, Family::s_iteration};

std::size_t worker_cap(std::size_t jobs) {
  std::size_t cap = std::max<unsigned>(1, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("FIXPOINT_LAB_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v >= 1) cap = static_cast<std::size_t>(v);
  }
  return std::min(cap, jobs);
}

SchemeConfig suite_scheme(Family family, const ParameterSchedule& alpha,
                          const ParameterSchedule& beta, int k) {
  switch (family) {
    case Family::picard:
      return make_scheme(Family::picard);
    case Family::krasnoselskij:
    case Family::mann:
      return make_scheme(family, alpha, {}, 0);
    case Family::ishikawa:
    case Family::new_two_step:
    case Family::s_iteration: {
      std::array<ParameterSchedule, 1> betas = {beta};
      return make_scheme(family, alpha, betas, 0);
    }
    case Family::noor:
    case Family::sp: {
      std::array<ParameterSchedule, 2> betas = {beta, beta};
      return make_scheme(family, alpha, betas, 0);
    }
    case Family::multistep:
    case Family::new_multistep: {
      std::vector<ParameterSchedule> betas(static_cast<std::size_t>(k - 1), beta);
      return make_scheme(family, alpha, betas, k);
    }
  }
  raise(ErrorCode::unknown_family, "unknown scheme family");
}

SuiteRow run_row(Family family, const Mapping& map, std::span<const double> x0,
                 const ParameterSchedule& alpha, const ParameterSchedule& beta, int k,
                 const Stopping& stopping, const Norm& norm, double delta, const Gauge& gauge) {
  SuiteRow row;
  row.family = family;
  SchemeConfig target = suite_scheme(family, alpha, beta, k);
  // The Mann reference shares the row's alpha values (Picard forces 1).
  SchemeConfig reference =
      make_scheme(Family::mann, expand_reduction(target).alpha, {}, 0);
  row.run = couple(map, reference, target, x0, stopping, norm);
  row.gap_tail = row.run.gap_tail_max();
  row.iterations = row.run.target.transitions();
  row.stop_reason = row.run.target.stop_reason;
  for (const AuditReport& report : applicable_audits(row.run, delta, gauge, norm)) {
    row.audits.push_back(AuditSummary{report.inequality, report.size(),
                                      report.violation_count(), report.min_slack,
                                      report.first_violation});
  }
  return row;
}

}  // namespace

std::span<const Family> suite_families() noexcept { return kSuiteFamilies; }

SuiteResult equivalence_suite(const Mapping& map, std::span<const double> x0,
                            const ParameterSchedule& alpha, const ParameterSchedule& beta, int k,
                            const Stopping& stopping, const Norm& norm, double delta,
                            const Gauge& gauge, double fp_tolerance) {
  if (alpha.kind() != ParameterSchedule::Kind::constant)
    raise(ErrorCode::invalid_argument, "the suite requires a constant alpha schedule");
  if (!(alpha.floor() > 0.0))
    raise(ErrorCode::schedule_floor_violated, "the suite requires an alpha floor A > 0");

  SuiteResult result;
  result.fp_tolerance = fp_tolerance;
  result.rows.resize(kSuiteFamilies.size());

  const std::size_t workers = worker_cap(kSuiteFamilies.size());
  std::size_t next = 0;
  while (next < kSuiteFamilies.size()) {
    std::size_t batch = std::min(workers, kSuiteFamilies.size() - next);
    std::vector<std::future<SuiteRow>> futures;
    futures.reserve(batch);
    for (std::size_t j = 0; j < batch; ++j) {
      Family family = kSuiteFamilies[next + j];
      futures.push_back(std::async(std::launch::async, [&, family] {
        return run_row(family, map, x0, alpha, beta, k, stopping, norm, delta, gauge);
      }));
    }
    for (std::size_t j = 0; j < batch; ++j) result.rows[next + j] = futures[j].get();
    next += batch;
  }

  if (map.known_fixed_point())
    result.fixed_point = *map.known_fixed_point();
  else
    result.fixed_point = result.rows.front().run.target.iterates.back();

  result.pass = true;
  for (SuiteRow& row : result.rows) {
    row.final_fp_error = norm.distance(row.run.target.iterates.back(), result.fixed_point);
    if (!(row.final_fp_error <= fp_tolerance) || row.stop_reason != StopReason::tolerance)
      result.pass = false;
  }
  return result;
}

}  // namespace fxl
