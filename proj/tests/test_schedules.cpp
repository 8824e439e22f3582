#include <doctest.h>

#include "fxl/schedule.hpp"

using namespace fxl;

TEST_CASE("constant schedules emit their value and default their floor") {
  ParameterSchedule s = ParameterSchedule::constant(0.5);
  CHECK(s.value(0) == 0.5);
  CHECK(s.value(10000) == 0.5);
  CHECK(s.floor() == 0.5);

  ParameterSchedule one = ParameterSchedule::constant(1.0);  // Picard needs 1
  CHECK(one.value(3) == 1.0);

  CHECK_THROWS_AS(ParameterSchedule::constant(1.5), Error);
  CHECK_THROWS_AS(ParameterSchedule::constant(-0.1), Error);
}

TEST_CASE("harmonic schedules decay and enforce a declared floor at emission") {
  ParameterSchedule s = ParameterSchedule::harmonic(2.0);
  CHECK(s.value(0) == 0.5);
  CHECK(s.value(2) == 0.25);
  CHECK(s.floor() == 0.0);

  ParameterSchedule floored = ParameterSchedule::harmonic(2.0, 0.2);
  CHECK(floored.value(0) == 0.5);
  CHECK(floored.value(3) == 0.2);
  CHECK_THROWS_AS(floored.value(4), Error);  // 1/6 < 0.2
  try {
    floored.value(4);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::schedule_floor_violated);
  }

  CHECK_THROWS_AS(ParameterSchedule::harmonic(0.5), Error);  // first value would exceed 1
}

TEST_CASE("list schedules extend with their final value") {
  ParameterSchedule s = ParameterSchedule::list({0.9, 0.7, 0.5});
  CHECK(s.value(0) == 0.9);
  CHECK(s.value(2) == 0.5);
  CHECK(s.value(50) == 0.5);
  CHECK(s.floor() == 0.5);  // defaults to the minimum entry

  CHECK_THROWS_AS(ParameterSchedule::list({}), Error);
  CHECK_THROWS_AS(ParameterSchedule::list({0.5, 1.2}), Error);
}

TEST_CASE("schedules compare structurally") {
  CHECK(ParameterSchedule::constant(0.5) == ParameterSchedule::constant(0.5));
  CHECK_FALSE(ParameterSchedule::constant(0.5) == ParameterSchedule::constant(0.25));
  CHECK_FALSE(ParameterSchedule::constant(0.5) == ParameterSchedule::constant(0.5, 0.0));
  CHECK_FALSE(ParameterSchedule::constant(0.5) == ParameterSchedule::harmonic(2.0));
  CHECK(ParameterSchedule::list({0.5, 0.25}) == ParameterSchedule::list({0.5, 0.25}));
}
