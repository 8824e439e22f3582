#pragma once

#include "fxl/audit_report.hpp"
#include "fxl/coupled.hpp"
#include "fxl/gauge.hpp"

namespace fxl {

/// Per-step audits of the one-step contraction estimates behind the
/// Mann/new-multistep and Mann/S-iteration equivalences. Every factor on the
/// right-hand side is reassembled from the recorded schedule values,
/// residuals and auxiliary points of the coupled run; delta and the gauge
/// come from a condition certificate and A is the run's declared alpha floor.
///
/// Forward audits bound the next gap by the Mann side's residual, backward
/// audits by the target side's residuals (iterate and auxiliary levels).
AuditReport audit_new_multistep_forward(const CoupledRun& run, double delta, const Gauge& gauge,
                                        const Norm& norm);
AuditReport audit_new_multistep_backward(const CoupledRun& run, double delta, const Gauge& gauge,
                                         const Norm& norm);
AuditReport audit_s_iteration_forward(const CoupledRun& run, double delta, const Gauge& gauge,
                                      const Norm& norm);
AuditReport audit_s_iteration_backward(const CoupledRun& run, double delta, const Gauge& gauge,
                                       const Norm& norm);

/// The audits applicable to a coupled run against a Mann reference:
/// both new-multistep audits when the target is (exactly) a new-multistep
/// configuration, both S-iteration audits when it is an S-iteration, none
/// otherwise.
std::vector<AuditReport> applicable_audits(const CoupledRun& run, double delta, const Gauge& gauge,
                                           const Norm& norm);

}  // namespace fxl
