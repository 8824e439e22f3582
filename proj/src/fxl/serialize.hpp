#pragma once

#include <string>

#include "fxl/conditions.hpp"
#include "fxl/convergence.hpp"
#include "fxl/suite.hpp"

namespace fxl {

/// 17-significant-digit decimal rendering; round-trips doubles exactly.
std::string format_double(double v);

std::string trajectory_csv(const Trajectory& trajectory);
std::string coupled_csv(const CoupledRun& run);
std::string suite_csv(const SuiteResult& result);

std::string condition_check_json(const ConditionCheck& check, const std::string& map_label);
std::string audit_json(const AuditReport& report, const std::string& label);
std::string recurrence_verdict_json(const RecurrenceVerdict& verdict, const std::string& label);
std::string suite_json(const SuiteResult& result, const std::string& map_label);

std::string scheme_json(const SchemeConfig& config);
SchemeConfig scheme_from_json(const std::string& text);

}  // namespace fxl
