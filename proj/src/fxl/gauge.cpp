#include "fxl/gauge.hpp"

#include <algorithm>
#include <cmath>

namespace fxl {

Gauge Gauge::linear(double slope) {
  if (!(slope > 0.0) || !std::isfinite(slope))
    raise(ErrorCode::invalid_constants, "linear gauge requires slope > 0");
  Gauge g;
  g.kind_ = Kind::linear;
  g.slope_ = slope;
  return g;
}

Gauge Gauge::power(double coeff, double exponent) {
  if (!(coeff > 0.0) || !std::isfinite(coeff))
    raise(ErrorCode::invalid_constants, "power gauge requires coeff > 0");
  if (!(exponent >= 1.0) || !std::isfinite(exponent))
    raise(ErrorCode::invalid_constants, "power gauge requires exponent >= 1");
  Gauge g;
  g.kind_ = Kind::power;
  g.coeff_ = coeff;
  g.exponent_ = exponent;
  return g;
}

Gauge Gauge::tabulated(Vec knots, Vec values) {
  if (knots.size() != values.size() || knots.size() < 2)
    raise(ErrorCode::invalid_constants, "tabulated gauge requires >= 2 matching knots/values");
  if (knots.front() != 0.0 || values.front() != 0.0)
    raise(ErrorCode::invalid_constants, "tabulated gauge must start at (0, 0)");
  for (std::size_t i = 1; i < knots.size(); ++i) {
    if (!(knots[i] > knots[i - 1]) || !(values[i] > values[i - 1]))
      raise(ErrorCode::invalid_constants, "tabulated gauge must be strictly increasing");
    if (!std::isfinite(knots[i]) || !std::isfinite(values[i]))
      raise(ErrorCode::invalid_constants, "tabulated gauge entries must be finite");
  }
  Gauge g;
  g.kind_ = Kind::tabulated;
  g.knots_ = std::move(knots);
  g.values_ = std::move(values);
  return g;
}

double Gauge::operator()(double t) const {
  if (!(t >= 0.0))
    raise(ErrorCode::invalid_argument, "gauge argument must be >= 0");
  switch (kind_) {
    case Kind::linear:
      return slope_ * t;
    case Kind::power:
      return coeff_ * std::pow(t, exponent_);
    case Kind::tabulated: {
      // Extend past the last knot with the final segment's slope.
      auto it = std::upper_bound(knots_.begin(), knots_.end(), t);
      std::size_t j = it == knots_.end() ? knots_.size() - 1
                                         : static_cast<std::size_t>(it - knots_.begin());
      if (j == 0) j = 1;
      double t0 = knots_[j - 1], t1 = knots_[j];
      double v0 = values_[j - 1], v1 = values_[j];
      return v0 + (t - t0) * (v1 - v0) / (t1 - t0);
    }
  }
  return 0.0;
}

}  // namespace fxl
