#pragma once

#include "fxl/box.hpp"

namespace fxl {

/// Gauge function: strictly increasing, continuous on [0, inf) with
/// gauge(0) = 0. Three closed families: linear L*t, power c*t^q with
/// q >= 1, and a piecewise-linear tabulated curve through (0, 0).
class Gauge {
 public:
  enum class Kind { linear, power, tabulated };

  static Gauge linear(double slope);
  static Gauge power(double coeff, double exponent);
  static Gauge tabulated(Vec knots, Vec values);

  double operator()(double t) const;

  Kind kind() const noexcept { return kind_; }
  double slope() const noexcept { return slope_; }
  double coeff() const noexcept { return coeff_; }
  double exponent() const noexcept { return exponent_; }
  const Vec& knots() const noexcept { return knots_; }
  const Vec& values() const noexcept { return values_; }

 private:
  Gauge() = default;
  Kind kind_ = Kind::linear;
  double slope_ = 1.0;
  double coeff_ = 1.0;
  double exponent_ = 1.0;
  Vec knots_;
  Vec values_;
};

}  // namespace fxl
