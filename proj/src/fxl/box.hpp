#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "fxl/errors.hpp"

namespace fxl {

using Vec = std::vector<double>;

/// Axis-aligned closed box [lo, hi]^d; the convex domain every mapping
/// and every iterate is required to stay inside.
struct Box {
  Vec lo;
  Vec hi;

  Box() = default;
  Box(Vec lo_in, Vec hi_in) : lo(std::move(lo_in)), hi(std::move(hi_in)) {
    if (lo.empty() || lo.size() != hi.size())
      raise(ErrorCode::invalid_argument, "box bounds must be non-empty and of equal dimension");
    for (std::size_t i = 0; i < lo.size(); ++i) {
      if (!std::isfinite(lo[i]) || !std::isfinite(hi[i]))
        raise(ErrorCode::invalid_argument, "box bounds must be finite");
      if (lo[i] > hi[i])
        raise(ErrorCode::invalid_argument, "box has lo > hi");
    }
  }

  std::size_t dimension() const noexcept { return lo.size(); }

  bool contains(std::span<const double> x) const noexcept {
    if (x.size() != lo.size()) return false;
    for (std::size_t i = 0; i < lo.size(); ++i) {
      if (!(x[i] >= lo[i] && x[i] <= hi[i])) return false;  // rejects NaN
    }
    return true;
  }

  Vec midpoint() const {
    Vec m(lo.size());
    for (std::size_t i = 0; i < lo.size(); ++i) m[i] = lo[i] + 0.5 * (hi[i] - lo[i]);
    return m;
  }
};

inline Vec sub(std::span<const double> a, std::span<const double> b) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

inline bool all_finite(std::span<const double> x) noexcept {
  for (double v : x)
    if (!std::isfinite(v)) return false;
  return true;
}

}  // namespace fxl
