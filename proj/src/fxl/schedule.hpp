#pragma once

#include "fxl/box.hpp"

namespace fxl {

/// Step-size sequence in [0, 1]. Value 1 is admitted (the Picard reduction
/// needs it). A positive declared floor is enforced at emission time.
class ParameterSchedule {
 public:
  enum class Kind { constant, harmonic, list };

  /// Constant value; floor defaults to the value itself.
  static ParameterSchedule constant(double value);
  static ParameterSchedule constant(double value, double floor);
  /// 1/(n + offset) with offset >= 1; floor defaults to 0.
  static ParameterSchedule harmonic(double offset, double floor = 0.0);
  /// Explicit prefix, extended past the end with its final value; floor
  /// defaults to the minimum entry.
  static ParameterSchedule list(Vec values);
  static ParameterSchedule list(Vec values, double floor);

  /// n-th value; throws schedule_floor_violated when a positive declared
  /// floor is undercut.
  double value(std::size_t n) const;
  double floor() const noexcept { return floor_; }

  Kind kind() const noexcept { return kind_; }
  double constant_value() const noexcept { return value_; }
  double harmonic_offset() const noexcept { return offset_; }
  const Vec& values() const noexcept { return values_; }

  bool operator==(const ParameterSchedule&) const = default;

 private:
  ParameterSchedule() = default;
  Kind kind_ = Kind::constant;
  double value_ = 0.0;
  double offset_ = 1.0;
  Vec values_;
  double floor_ = 0.0;
};

}  // namespace fxl
