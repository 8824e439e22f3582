#include "fxl/schedule.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace fxl {

namespace {

void check_unit_interval(double v, const char* what) {
  if (!(v >= 0.0 && v <= 1.0))
    raise(ErrorCode::invalid_argument, std::string(what) + " must lie in [0, 1]");
}

}  // namespace

ParameterSchedule ParameterSchedule::constant(double value) { return constant(value, value); }

ParameterSchedule ParameterSchedule::constant(double value, double floor) {
  check_unit_interval(value, "constant schedule value");
  check_unit_interval(floor, "schedule floor");
  ParameterSchedule s;
  s.kind_ = Kind::constant;
  s.value_ = value;
  s.floor_ = floor;
  return s;
}

ParameterSchedule ParameterSchedule::harmonic(double offset, double floor) {
  if (!(offset >= 1.0) || !std::isfinite(offset))
    raise(ErrorCode::invalid_argument, "harmonic schedule offset must be >= 1");
  check_unit_interval(floor, "schedule floor");
  ParameterSchedule s;
  s.kind_ = Kind::harmonic;
  s.offset_ = offset;
  s.floor_ = floor;
  return s;
}

ParameterSchedule ParameterSchedule::list(Vec values) {
  if (values.empty()) raise(ErrorCode::invalid_argument, "list schedule must be non-empty");
  double floor = *std::min_element(values.begin(), values.end());
  return list(std::move(values), floor);
}

ParameterSchedule ParameterSchedule::list(Vec values, double floor) {
  if (values.empty()) raise(ErrorCode::invalid_argument, "list schedule must be non-empty");
  for (double v : values) check_unit_interval(v, "list schedule entry");
  check_unit_interval(floor, "schedule floor");
  ParameterSchedule s;
  s.kind_ = Kind::list;
  s.values_ = std::move(values);
  s.floor_ = floor;
  return s;
}

double ParameterSchedule::value(std::size_t n) const {
  double v = 0.0;
  switch (kind_) {
    case Kind::constant: v = value_; break;
    case Kind::harmonic: v = 1.0 / (static_cast<double>(n) + offset_); break;
    case Kind::list: v = n < values_.size() ? values_[n] : values_.back(); break;
  }
  if (floor_ > 0.0 && v < floor_)
    raise(ErrorCode::schedule_floor_violated,
          "schedule emitted " + std::to_string(v) + " below its declared floor " +
              std::to_string(floor_));
  return v;
}

}  // namespace fxl
