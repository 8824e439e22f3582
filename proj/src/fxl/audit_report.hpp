#pragma once

#include <optional>
#include <string>

#include "fxl/box.hpp"

namespace fxl {

inline constexpr double kAuditTolerance = 1e-10;

/// Per-step record of one audited inequality: lhs, rhs, slack = rhs - lhs.
/// A step with slack below -tolerance is a violation.
struct AuditReport {
  std::string inequality;
  Vec lhs;
  Vec rhs;
  Vec slack;
  std::optional<std::size_t> first_violation;
  double min_slack = 0.0;
  double tolerance = kAuditTolerance;

  std::size_t size() const noexcept { return lhs.size(); }
  std::size_t violation_count() const noexcept {
    std::size_t n = 0;
    for (double s : slack)
      if (s < -tolerance) ++n;
    return n;
  }

  void push(double lhs_value, double rhs_value) {
    double s = rhs_value - lhs_value;
    lhs.push_back(lhs_value);
    rhs.push_back(rhs_value);
    slack.push_back(s);
    if (slack.size() == 1 || s < min_slack) min_slack = s;
    if (!first_violation && s < -tolerance) first_violation = slack.size() - 1;
  }
};

}  // namespace fxl
