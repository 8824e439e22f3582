#pragma once

#include "fxl/audit_report.hpp"
#include "fxl/norm.hpp"
#include "fxl/schemes.hpp"

namespace fxl {

/// Finite prefix of a recurrence a_{n+1} <= (1 - mu_n) a_n + rho_n:
/// a holds n+1 entries, mu and rho hold n entries each.
struct RecurrenceWitness {
  Vec a;
  Vec mu;
  Vec rho;

  std::size_t length() const noexcept { return mu.size(); }
};

/// Finite-prefix diagnostics for the vanishing-sequence recurrence. The
/// asymptotic hypotheses (divergent mu-sum, rho small relative to mu) are
/// undecidable from a prefix, so the verdict reports monotone proxies and
/// claims consistency, never proof.
struct RecurrenceVerdict {
  bool recurrence_holds = false;
  std::optional<std::size_t> first_violation;
  double mu_partial_sum = 0.0;
  double rho_over_mu_head_max = 0.0;  // max over the first quarter
  double rho_over_mu_tail_max = 0.0;  // max over the last quarter
  double a_head_max = 0.0;
  double a_tail_max = 0.0;
  double slack = 0.0;
  bool consistent = false;
};

RecurrenceVerdict check_recurrence(const RecurrenceWitness& witness, double slack);

/// Checks ||x_n - T x_n|| <= (1 + delta) ||x_n - p|| + tolerance at every
/// recorded iterate of a trajectory with a known fixed point.
AuditReport residual_decay_bound(const Trajectory& trajectory, double delta);

/// Same bound for every recorded auxiliary level: ||y^i - T y^i|| <=
/// (1 + delta) ||x_n - p|| + tolerance. Requires a trajectory recorded with
/// step records and a known fixed point. Entries are step-major.
AuditReport intermediate_residual_bound(const Trajectory& trajectory, const Norm& norm,
                                        double delta);

}  // namespace fxl
