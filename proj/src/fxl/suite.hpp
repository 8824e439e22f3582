#pragma once

#include "fxl/audits.hpp"
#include "fxl/coupled.hpp"

namespace fxl {

struct AuditSummary {
  std::string inequality;
  std::size_t steps = 0;
  std::size_t violations = 0;
  double min_slack = 0.0;
  std::optional<std::size_t> first_violation;
};

struct SuiteRow {
  Family family = Family::mann;
  CoupledRun run;
  double final_fp_error = 0.0;
  double gap_tail = 0.0;
  std::size_t iterations = 0;
  StopReason stop_reason = StopReason::max_iters;
  std::vector<AuditSummary> audits;

  std::size_t audit_violations() const noexcept {
    std::size_t n = 0;
    for (const auto& a : audits) n += a.violations;
    return n;
  }
};

struct SuiteResult {
  std::vector<SuiteRow> rows;  // the ten schemes, fixed order
  Vec fixed_point;             // known fixed point, or the first row's limit
  double fp_tolerance = 1e-7;
  bool pass = false;           // all rows within fp_tolerance of fixed_point
};

/// Runs the ten schemes (Picard, Krasnoselskij, Mann, Ishikawa, new two-step,
/// Noor, SP, multistep, new multistep, S-iteration) from one starting point,
/// couples each against a Mann reference sharing its alpha schedule, and
/// audits every pairing the one-step estimates cover. Rows are independent
/// and may execute in parallel; FIXPOINT_LAB_THREADS caps the worker count.
///
/// alpha must be a constant schedule (the Krasnoselskij row is defined by a
/// constant step) with floor A > 0; beta is replicated across the auxiliary
/// levels of the multistep families, which use the given k.
SuiteResult equivalence_suite(const Mapping& map, std::span<const double> x0,
                            const ParameterSchedule& alpha, const ParameterSchedule& beta, int k,
                            const Stopping& stopping, const Norm& norm, double delta,
                            const Gauge& gauge, double fp_tolerance = 1e-7);

std::span<const Family> suite_families() noexcept;

}  // namespace fxl
