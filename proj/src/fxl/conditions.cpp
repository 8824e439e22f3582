#include "fxl/conditions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace fxl {

const char* condition_class_name(ConditionClass cls) noexcept {
  switch (cls) {
    case ConditionClass::zamfirescu: return "zamfirescu";
    case ConditionClass::quasi_contractive: return "quasi_contractive";
    case ConditionClass::osilike_udomene: return "osilike_udomene";
    case ConditionClass::contractive_like: return "contractive_like";
  }
  return "unknown";
}

namespace {

void validate_zamfirescu(const ZamfirescuConstants& z) {
  if (!(z.a > 0.0 && z.a < 1.0))
    raise(ErrorCode::invalid_constants, "zamfirescu constant a must satisfy 0 < a < 1");
  if (!(z.b > 0.0 && z.b < 0.5) || !(z.c > 0.0 && z.c < 0.5))
    raise(ErrorCode::invalid_constants, "zamfirescu constants b, c must satisfy 0 < b, c < 1/2");
}

void validate_delta(double delta) {
  if (!(delta >= 0.0 && delta < 1.0))
    raise(ErrorCode::invalid_constants, "delta must lie in [0, 1)");
}

// Shared sweep: `margins(pair) -> best margin, branch excesses, alt margin`.
template <typename MarginFn>
ConditionCheck sweep(ConditionClass cls, const Mapping& map, const Norm& norm,
                     std::span<const PointPair> samples, MarginFn&& margins) {
  ConditionCheck check;
  check.condition = cls;
  check.sample_count = samples.size();
  check.certified = true;
  check.alt_branch_holds = true;
  check.max_slack = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const PointPair& pair = samples[i];
    Vec tx = map.evaluate(pair.x);
    Vec ty = map.evaluate(pair.y);
    double d_images = norm.distance(tx, ty);
    double d_points = norm.distance(pair.x, pair.y);
    double res_x = norm.distance(pair.x, tx);
    auto [margin, excess, alt_margin] = margins(pair, tx, ty, d_images, d_points, res_x);
    check.max_slack = std::min(check.max_slack, margin);
    if (alt_margin < -kConditionTolerance) check.alt_branch_holds = false;
    if (margin < -kConditionTolerance) {
      check.certified = false;
      check.violation = ConditionViolation{i, pair.x, pair.y, std::move(excess)};
      break;
    }
  }
  if (samples.empty()) check.max_slack = 0.0;
  return check;
}

}  // namespace

double delta_from_zamfirescu(double a, double b, double c) {
  validate_zamfirescu({a, b, c});
  return std::max({a, b / (1.0 - b), c / (1.0 - c)});
}

ConditionCheck check_zamfirescu(const Mapping& map, const Norm& norm,
                                const ZamfirescuConstants& constants,
                                std::span<const PointPair> samples) {
  validate_zamfirescu(constants);
  ConditionCheck check = sweep(
      ConditionClass::zamfirescu, map, norm, samples,
      [&](const PointPair& pair, const Vec& tx, const Vec& ty, double d_images, double d_points,
          double res_x) {
        double res_y = norm.distance(pair.y, ty);
        double m1 = constants.a * d_points - d_images;
        double m2 = constants.b * (res_x + res_y) - d_images;
        double m3 = constants.c * (norm.distance(pair.x, ty) + norm.distance(pair.y, tx)) - d_images;
        double best = std::max({m1, m2, m3});
        return std::tuple<double, Vec, double>{best, Vec{-m1, -m2, -m3}, best};
      });
  check.a = constants.a;
  check.b = constants.b;
  check.c = constants.c;
  return check;
}

ConditionCheck check_quasi_contractive(const Mapping& map, const Norm& norm, double delta,
                                       std::span<const PointPair> samples) {
  validate_delta(delta);
  ConditionCheck check = sweep(
      ConditionClass::quasi_contractive, map, norm, samples,
      [&](const PointPair& pair, const Vec&, const Vec& ty, double d_images, double d_points,
          double res_x) {
        double margin = delta * d_points + 2.0 * delta * res_x - d_images;
        // Alternate form replaces the x-residual with the cross term to the
        // image of y; reported as a flag, never a certificate.
        double alt = delta * d_points + 2.0 * delta * norm.distance(pair.x, ty) - d_images;
        return std::tuple<double, Vec, double>{margin, Vec{-margin}, alt};
      });
  check.delta = delta;
  return check;
}

ConditionCheck check_osilike(const Mapping& map, const Norm& norm, double delta, double big_l,
                             std::span<const PointPair> samples) {
  validate_delta(delta);
  if (!(big_l >= 0.0) || !std::isfinite(big_l))
    raise(ErrorCode::invalid_constants, "constant L must satisfy L >= 0");
  ConditionCheck check = sweep(
      ConditionClass::osilike_udomene, map, norm, samples,
      [&](const PointPair&, const Vec&, const Vec&, double d_images, double d_points,
          double res_x) {
        double margin = delta * d_points + big_l * res_x - d_images;
        return std::tuple<double, Vec, double>{margin, Vec{-margin}, margin};
      });
  check.delta = delta;
  check.big_l = big_l;
  return check;
}

ConditionCheck check_contractive_like(const Mapping& map, const Norm& norm, double delta,
                                      const Gauge& gauge, std::span<const PointPair> samples) {
  validate_delta(delta);
  ConditionCheck check = sweep(
      ConditionClass::contractive_like, map, norm, samples,
      [&](const PointPair&, const Vec&, const Vec&, double d_images, double d_points,
          double res_x) {
        double margin = delta * d_points + gauge(res_x) - d_images;
        return std::tuple<double, Vec, double>{margin, Vec{-margin}, margin};
      });
  check.delta = delta;
  check.gauge = gauge;
  return check;
}

std::optional<Vec> verify_unique_fixed_point(const Mapping& map, const Norm& norm,
                                             const ConditionCheck& certificate,
                                             std::span<const Vec> candidates,
                                             double residual_tol) {
  if (certificate.condition != ConditionClass::contractive_like)
    raise(ErrorCode::invalid_argument,
          "uniqueness verification requires a contractive_like certificate");
  std::optional<Vec> found;
  double found_residual = std::numeric_limits<double>::infinity();
  for (const Vec& candidate : candidates) {
    Vec image = map.evaluate(candidate);
    double residual = norm.distance(image, candidate);
    if (residual > residual_tol) continue;
    if (found && certificate.certified && norm.distance(*found, candidate) > 1e-8)
      raise(ErrorCode::fixed_point_contradiction,
            map.label() + ": two distinct fixed points pass under a certified condition");
    if (residual < found_residual) {
      found = candidate;
      found_residual = residual;
    }
  }
  return found;
}

}  // namespace fxl
