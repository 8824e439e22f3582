#pragma once

#include <optional>
#include <string>

#include "fxl/gauge.hpp"
#include "fxl/mapping.hpp"
#include "fxl/norm.hpp"
#include "fxl/sampling.hpp"

namespace fxl {

enum class ConditionClass { zamfirescu, quasi_contractive, osilike_udomene, contractive_like };

const char* condition_class_name(ConditionClass cls) noexcept;

/// Three-branch constants: 0 < a < 1, 0 < b, c < 1/2.
struct ZamfirescuConstants {
  double a;
  double b;
  double c;
};

/// Largest ratio implied by the three branches: max{a, b/(1-b), c/(1-c)},
/// always in [0, 1) on the valid constant box.
double delta_from_zamfirescu(double a, double b, double c);

struct ConditionViolation {
  std::size_t pair_index = 0;
  Vec x;
  Vec y;
  // Amount by which each branch inequality fails (lhs - rhs); one entry per
  // branch for the three-branch condition, a single entry otherwise.
  Vec branch_excess;
};

/// Outcome of sampling one condition over a finite pair set. A certificate
/// means "no violation found on sample_count pairs", nothing stronger.
struct ConditionCheck {
  ConditionClass condition = ConditionClass::zamfirescu;
  bool certified = false;
  std::size_t sample_count = 0;
  // Tightest margin (min over pairs of rhs - lhs for the best branch);
  // nonnegative whenever the condition holds with room to spare.
  double max_slack = 0.0;
  // Informational only: whether the alternate image-residual form held on
  // every pair as well.
  bool alt_branch_holds = false;
  std::optional<ConditionViolation> violation;

  // Constants the check ran with, for reporting.
  double a = 0.0, b = 0.0, c = 0.0;
  double delta = 0.0;
  double big_l = 0.0;
  std::optional<Gauge> gauge;
};

inline constexpr double kConditionTolerance = 1e-12;

ConditionCheck check_zamfirescu(const Mapping& map, const Norm& norm,
                                const ZamfirescuConstants& constants,
                                std::span<const PointPair> samples);

ConditionCheck check_quasi_contractive(const Mapping& map, const Norm& norm, double delta,
                                       std::span<const PointPair> samples);

ConditionCheck check_osilike(const Mapping& map, const Norm& norm, double delta, double big_l,
                             std::span<const PointPair> samples);

ConditionCheck check_contractive_like(const Mapping& map, const Norm& norm, double delta,
                                      const Gauge& gauge, std::span<const PointPair> samples);

/// Scans candidates for points with residual at most `residual_tol`; under a
/// contractive-like certificate at most one may exist. Two hits further apart
/// than 1e-8 raise fixed_point_contradiction.
std::optional<Vec> verify_unique_fixed_point(const Mapping& map, const Norm& norm,
                                             const ConditionCheck& certificate,
                                             std::span<const Vec> candidates,
                                             double residual_tol = 1e-9);

}  // namespace fxl
