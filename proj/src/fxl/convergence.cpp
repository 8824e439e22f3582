#include "fxl/convergence.hpp"

#include <algorithm>
#include <cmath>

namespace fxl {

namespace {

double window_max(std::span<const double> v, bool head) {
  std::size_t w = std::max<std::size_t>(1, (v.size() + 3) / 4);  // quarter, rounded up
  double m = 0.0;
  if (head) {
    for (std::size_t i = 0; i < w; ++i) m = std::max(m, v[i]);
  } else {
    for (std::size_t i = v.size() - w; i < v.size(); ++i) m = std::max(m, v[i]);
  }
  return m;
}

void validate_delta(double delta) {
  if (!(delta >= 0.0 && delta < 1.0))
    raise(ErrorCode::invalid_constants, "delta must lie in [0, 1)");
}

}  // namespace

RecurrenceVerdict check_recurrence(const RecurrenceWitness& witness, double slack) {
  const std::size_t n = witness.length();
  if (n < 8) raise(ErrorCode::malformed_witness, "witness prefix must have length >= 8");
  if (witness.a.size() != n + 1 || witness.rho.size() != n)
    raise(ErrorCode::malformed_witness, "witness requires |a| = n + 1 and |mu| = |rho| = n");
  if (!(slack >= 0.0))
    raise(ErrorCode::invalid_argument, "slack must be >= 0");
  for (double v : witness.a)
    if (!(v >= 0.0) || !std::isfinite(v))
      raise(ErrorCode::malformed_witness, "witness sequence entries must be finite and >= 0");
  for (double v : witness.rho)
    if (!(v >= 0.0) || !std::isfinite(v))
      raise(ErrorCode::malformed_witness, "witness rho entries must be finite and >= 0");
  for (double v : witness.mu)
    if (!(v > 0.0 && v < 1.0))
      raise(ErrorCode::malformed_witness, "witness mu entries must lie strictly inside (0, 1)");

  RecurrenceVerdict verdict;
  verdict.slack = slack;
  verdict.recurrence_holds = true;
  for (std::size_t i = 0; i < n; ++i) {
    double bound = (1.0 - witness.mu[i]) * witness.a[i] + witness.rho[i];
    if (witness.a[i + 1] > bound + slack) {
      verdict.recurrence_holds = false;
      verdict.first_violation = i;
      break;
    }
  }

  for (double mu : witness.mu) verdict.mu_partial_sum += mu;

  Vec ratio(n);
  for (std::size_t i = 0; i < n; ++i) ratio[i] = witness.rho[i] / witness.mu[i];
  verdict.rho_over_mu_head_max = window_max(ratio, true);
  verdict.rho_over_mu_tail_max = window_max(ratio, false);
  verdict.a_head_max = window_max(witness.a, true);
  verdict.a_tail_max = window_max(witness.a, false);

  bool ratio_vanishing = verdict.rho_over_mu_tail_max == 0.0 ||
                         verdict.rho_over_mu_tail_max < verdict.rho_over_mu_head_max;
  bool a_decaying = verdict.a_tail_max == 0.0 || verdict.a_tail_max < verdict.a_head_max;
  verdict.consistent = verdict.recurrence_holds && ratio_vanishing && a_decaying;
  return verdict;
}

AuditReport residual_decay_bound(const Trajectory& trajectory, double delta) {
  validate_delta(delta);
  if (!trajectory.fixed_point_known)
    raise(ErrorCode::missing_fixed_point,
          "residual decay bound needs a trajectory with a known fixed point");
  AuditReport report;
  report.inequality = "iterate_residual_decay";
  for (std::size_t n = 0; n < trajectory.length(); ++n)
    report.push(trajectory.residuals[n], (1.0 + delta) * trajectory.fp_distances[n]);
  return report;
}

AuditReport intermediate_residual_bound(const Trajectory& trajectory, const Norm& norm,
                                        double delta) {
  validate_delta(delta);
  if (!trajectory.fixed_point_known)
    raise(ErrorCode::missing_fixed_point,
          "intermediate residual bound needs a trajectory with a known fixed point");
  if (trajectory.steps.size() != trajectory.transitions())
    raise(ErrorCode::invalid_argument,
          "intermediate residual bound needs a trajectory recorded with step records");
  AuditReport report;
  report.inequality = "intermediate_residual_decay";
  for (std::size_t n = 0; n < trajectory.steps.size(); ++n) {
    const StepRecord& step = trajectory.steps[n];
    double bound = (1.0 + delta) * trajectory.fp_distances[n];
    for (std::size_t level = 0; level < step.y.size(); ++level)
      report.push(norm.distance(step.y[level], step.ty[level]), bound);
  }
  return report;
}

}  // namespace fxl
