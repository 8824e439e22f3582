#pragma once

#include <span>

#include "fxl/box.hpp"

namespace fxl {

/// Vector norm: either a p-norm with p in [1, inf] or a weighted 2-norm
/// with strictly positive weights.
class Norm {
 public:
  enum class Kind { p_norm, weighted_two };

  static Norm p_norm(double p);
  static Norm euclidean() { return p_norm(2.0); }
  static Norm weighted_two(Vec weights);

  double operator()(std::span<const double> x) const;
  double distance(std::span<const double> a, std::span<const double> b) const;

  Kind kind() const noexcept { return kind_; }
  double p() const noexcept { return p_; }
  const Vec& weights() const noexcept { return weights_; }

 private:
  Norm() = default;
  Kind kind_ = Kind::p_norm;
  double p_ = 2.0;
  Vec weights_;
};

}  // namespace fxl
