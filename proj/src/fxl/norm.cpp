#include "fxl/norm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace fxl {

Norm Norm::p_norm(double p) {
  if (std::isnan(p) || p < 1.0)
    raise(ErrorCode::invalid_argument, "p-norm requires p >= 1");
  Norm n;
  n.kind_ = Kind::p_norm;
  n.p_ = p;
  return n;
}

Norm Norm::weighted_two(Vec weights) {
  if (weights.empty())
    raise(ErrorCode::invalid_argument, "weighted 2-norm requires at least one weight");
  for (double w : weights)
    if (!(w > 0.0) || !std::isfinite(w))
      raise(ErrorCode::invalid_argument, "weighted 2-norm requires positive finite weights");
  Norm n;
  n.kind_ = Kind::weighted_two;
  n.weights_ = std::move(weights);
  return n;
}

double Norm::operator()(std::span<const double> x) const {
  if (kind_ == Kind::weighted_two) {
    if (x.size() != weights_.size())
      raise(ErrorCode::invalid_argument, "weighted 2-norm dimension mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += weights_[i] * x[i] * x[i];
    return std::sqrt(s);
  }
  if (std::isinf(p_)) {
    double m = 0.0;
    for (double v : x) m = std::max(m, std::abs(v));
    return m;
  }
  if (p_ == 2.0) {
    double s = 0.0;
    for (double v : x) s += v * v;
    return std::sqrt(s);
  }
  if (p_ == 1.0) {
    double s = 0.0;
    for (double v : x) s += std::abs(v);
    return s;
  }
  // General p: scale by the max component to avoid overflow.
  double m = 0.0;
  for (double v : x) m = std::max(m, std::abs(v));
  if (m == 0.0) return 0.0;
  double s = 0.0;
  for (double v : x) s += std::pow(std::abs(v) / m, p_);
  return m * std::pow(s, 1.0 / p_);
}

double Norm::distance(std::span<const double> a, std::span<const double> b) const {
  if (a.size() != b.size())
    raise(ErrorCode::invalid_argument, "norm distance dimension mismatch");
  return (*this)(sub(a, b));
}

}  // namespace fxl
