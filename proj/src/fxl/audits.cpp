#include "fxl/audits.hpp"

namespace fxl {

namespace {

void validate_delta(double delta) {
  if (!(delta >= 0.0 && delta < 1.0))
    raise(ErrorCode::invalid_constants, "delta must lie in [0, 1)");
}

void require_mann_reference(const CoupledRun& run) {
  if (!is_mann_form(run.reference.scheme))
    raise(ErrorCode::scheme_mismatch, "audit requires a Mann-form reference scheme");
  if (run.target.steps.size() + 1 != run.length() ||
      run.reference.steps.size() + 1 != run.length())
    raise(ErrorCode::invalid_argument, "audit requires full step records on both sides");
}

void require_new_multistep(const CoupledRun& run) {
  if (!as_new_multistep_form(run.target.scheme))
    raise(ErrorCode::scheme_mismatch, "audit requires a new-multistep target scheme");
}

void require_s_iteration(const CoupledRun& run) {
  if (expand_reduction(run.target.scheme).family != Family::s_iteration)
    raise(ErrorCode::scheme_mismatch, "audit requires an S-iteration target scheme");
}

}  // namespace

AuditReport audit_new_multistep_forward(const CoupledRun& run, double delta, const Gauge& gauge,
                                        const Norm&) {
  validate_delta(delta);
  require_mann_reference(run);
  require_new_multistep(run);

  const double f = 1.0 - run.floor_a * (1.0 - delta);
  AuditReport report;
  report.inequality = "mann_vs_new_multistep_forward";
  for (std::size_t n = 0; n + 1 < run.length(); ++n) {
    const StepRecord& step = run.target.steps[n];
    const std::size_t levels = step.betas.size();  // k - 1

    // Bracketed sum: one term per level j = k-1 .. 1, each the product of the
    // attenuation factors below it times beta^j.
    Vec prefix(levels + 1, 1.0);
    for (std::size_t i = 1; i <= levels; ++i)
      prefix[i] = prefix[i - 1] * (1.0 - step.betas[i - 1] * (1.0 - delta));
    double sum = 0.0;
    for (std::size_t j = levels; j >= 1; --j) sum += prefix[j - 1] * step.betas[j - 1];

    double res_u = run.reference.residuals[n];
    double rho = f * sum * (res_u + gauge(res_u)) + step.alpha * gauge(res_u);
    report.push(run.gap[n + 1], f * run.gap[n] + rho);
  }
  return report;
}

AuditReport audit_new_multistep_backward(const CoupledRun& run, double delta, const Gauge& gauge,
                                         const Norm& norm) {
  validate_delta(delta);
  require_mann_reference(run);
  require_new_multistep(run);

  const double f = 1.0 - run.floor_a * (1.0 - delta);
  AuditReport report;
  report.inequality = "mann_vs_new_multistep_backward";
  for (std::size_t n = 0; n + 1 < run.length(); ++n) {
    const StepRecord& step = run.target.steps[n];
    const std::size_t levels = step.betas.size();

    // Residual sum: the top level pairs with the iterate residual, every
    // other level pairs with the residual of the level above it.
    double sum = step.betas[levels - 1] * run.target.residuals[n];
    for (std::size_t level = levels - 1; level >= 1; --level)
      sum += step.betas[level - 1] * norm.distance(step.ty[level], step.y[level]);

    double first_level_residual = norm.distance(step.y[0], step.ty[0]);
    double rhs = f * run.gap[n] + f * sum + step.alpha * gauge(first_level_residual);
    report.push(run.gap[n + 1], rhs);
  }
  return report;
}

AuditReport audit_s_iteration_forward(const CoupledRun& run, double delta, const Gauge& gauge,
                                      const Norm&) {
  validate_delta(delta);
  require_mann_reference(run);
  require_s_iteration(run);

  const double f = 1.0 - run.floor_a * (1.0 - delta);
  AuditReport report;
  report.inequality = "mann_vs_s_iteration_forward";
  for (std::size_t n = 0; n + 1 < run.length(); ++n) {
    const StepRecord& step = run.target.steps[n];
    double res_u = run.reference.residuals[n];
    double rhs = f * run.gap[n] + f * res_u +
                 (1.0 + step.alpha * step.betas[0] * delta) * gauge(res_u);
    report.push(run.gap[n + 1], rhs);
  }
  return report;
}

AuditReport audit_s_iteration_backward(const CoupledRun& run, double delta, const Gauge& gauge,
                                       const Norm& norm) {
  validate_delta(delta);
  require_mann_reference(run);
  require_s_iteration(run);

  const double f = 1.0 - run.floor_a * (1.0 - delta);
  AuditReport report;
  report.inequality = "mann_vs_s_iteration_backward";
  for (std::size_t n = 0; n + 1 < run.length(); ++n) {
    const StepRecord& step = run.target.steps[n];
    double y_residual = norm.distance(step.y[0], step.ty[0]);
    double rhs = f * run.gap[n] + f * run.target.residuals[n] + step.alpha * gauge(y_residual);
    report.push(run.gap[n + 1], rhs);
  }
  return report;
}

std::vector<AuditReport> applicable_audits(const CoupledRun& run, double delta, const Gauge& gauge,
                                           const Norm& norm) {
  std::vector<AuditReport> reports;
  if (as_new_multistep_form(run.target.scheme)) {
    reports.push_back(audit_new_multistep_forward(run, delta, gauge, norm));
    reports.push_back(audit_new_multistep_backward(run, delta, gauge, norm));
  } else if (expand_reduction(run.target.scheme).family == Family::s_iteration) {
    reports.push_back(audit_s_iteration_forward(run, delta, gauge, norm));
    reports.push_back(audit_s_iteration_backward(run, delta, gauge, norm));
  }
  return reports;
}

}  // namespace fxl
