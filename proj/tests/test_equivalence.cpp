#include <doctest.h>

#include <cmath>
#include <cstdlib>

#include "fxl/audits.hpp"
#include "fxl/serialize.hpp"
#include "fxl/suite.hpp"

using namespace fxl;

namespace {

const Norm kNorm = Norm::euclidean();
const ParameterSchedule kHalf = ParameterSchedule::constant(0.5);

Mapping halving() {
  return make_affine_map("halving", Box({0.0}, {1.0}), {{0.5}}, {0.0}, Vec{0.0});
}

Mapping affine2d() {
  return make_affine_map("affine2d", Box({-2.0, -2.0}, {2.0, 2.0}),
                         {{0.8, 0.0}, {0.0, 0.5}}, {0.2, 0.5}, Vec{1.0, 1.0});
}

SchemeConfig mann_half() { return make_scheme(Family::mann, kHalf, {}, 0); }

SchemeConfig new_multistep3() {
  std::vector<ParameterSchedule> betas{kHalf, kHalf};
  return make_scheme(Family::new_multistep, kHalf, betas, 3);
}

SchemeConfig s_iteration_half() {
  std::vector<ParameterSchedule> betas{kHalf};
  return make_scheme(Family::s_iteration, kHalf, betas, 0);
}

}  // namespace

TEST_CASE("coupled mann / new-multistep run on the halving map") {
  Mapping map = halving();
  CoupledRun run = couple(map, mann_half(), new_multistep3(), Vec{1.0},
                          Stopping{1e-10, 10000, 1e12}, kNorm);
  CHECK(run.floor_a == 0.5);
  CHECK(run.length() <= 120);
  CHECK(run.reference.stop_reason == StopReason::tolerance);
  CHECK(run.target.stop_reason == StopReason::tolerance);
  CHECK(run.gap.back() < 1e-9);
  CHECK(run.outcome == CoupleOutcome::both_converged_same_p);

  // The two sides decay by their closed-form factors, so the gap is their
  // difference.
  for (std::size_t n = 0; n < std::min<std::size_t>(run.length(), 30); ++n) {
    double expected = std::pow(0.75, double(n)) - std::pow(27.0 / 64.0, double(n));
    CHECK(run.gap[n] == doctest::Approx(expected).epsilon(1e-13));
  }
}

TEST_CASE("coupling from the fixed point keeps the gap at zero") {
  Mapping map = halving();
  CoupledRun run = couple(map, mann_half(), new_multistep3(), Vec{0.0},
                          Stopping{1e-10, 100, 1e12}, kNorm);
  for (double g : run.gap) CHECK(g == 0.0);
  CHECK(run.outcome == CoupleOutcome::both_converged_same_p);
}

TEST_CASE("coupled mann / s-iteration run on the planar map") {
  Mapping map = affine2d();
  CoupledRun run = couple(map, mann_half(), s_iteration_half(), Vec{0.0, 0.0},
                          Stopping{1e-10, 10000, 1e12}, kNorm);
  CHECK(run.length() <= 250);
  CHECK(run.reference.fp_distances.back() <= 1e-7);
  CHECK(run.target.fp_distances.back() <= 1e-7);
  CHECK(run.gap.back() < 1e-8);
  CHECK(run.outcome == CoupleOutcome::both_converged_same_p);
}

TEST_CASE("coupling preconditions") {
  Mapping map = halving();
  // Alpha schedules must agree structurally.
  SchemeConfig other_alpha = make_scheme(Family::mann, ParameterSchedule::constant(0.25), {}, 0);
  CHECK_THROWS_AS(couple(map, other_alpha, new_multistep3(), Vec{1.0}, Stopping{}, kNorm), Error);

  // A positive declared floor is required.
  std::vector<ParameterSchedule> betas{ParameterSchedule::harmonic(2.0)};
  SchemeConfig no_floor = make_scheme(Family::new_multistep,
                                      ParameterSchedule::harmonic(2.0), betas, 2);
  SchemeConfig mann_no_floor = make_scheme(Family::mann, ParameterSchedule::harmonic(2.0), {}, 0);
  try {
    couple(map, mann_no_floor, no_floor, Vec{1.0}, Stopping{}, kNorm);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::schedule_floor_violated);
  }

  // Starting point must lie in the domain.
  CHECK_THROWS_AS(couple(map, mann_half(), new_multistep3(), Vec{3.0}, Stopping{}, kNorm), Error);
}

TEST_CASE("clean audits on the halving map have positive slack") {
  Mapping map = halving();
  const Gauge gauge = Gauge::linear(1.0);  // 2 * delta with delta = 1/2
  Stopping stopping{0.0, 50, 1e12};        // exactly 50 audited transitions

  CoupledRun ms = couple(map, mann_half(), new_multistep3(), Vec{1.0}, stopping, kNorm);
  AuditReport fwd = audit_new_multistep_forward(ms, 0.5, gauge, kNorm);
  AuditReport bwd = audit_new_multistep_backward(ms, 0.5, gauge, kNorm);
  CHECK(fwd.size() == 50);
  CHECK(fwd.violation_count() == 0);
  CHECK(fwd.min_slack > 0.0);
  CHECK(bwd.violation_count() == 0);
  CHECK_FALSE(bwd.first_violation.has_value());

  CoupledRun s = couple(map, mann_half(), s_iteration_half(), Vec{1.0}, stopping, kNorm);
  AuditReport s_fwd = audit_s_iteration_forward(s, 0.5, gauge, kNorm);
  AuditReport s_bwd = audit_s_iteration_backward(s, 0.5, gauge, kNorm);
  CHECK(s_fwd.violation_count() == 0);
  CHECK(s_bwd.violation_count() == 0);
}

TEST_CASE("audits at the fixed point are vacuously clean") {
  Mapping map = halving();
  CoupledRun run = couple(map, mann_half(), new_multistep3(), Vec{0.0},
                          Stopping{1e-10, 50, 1e12}, kNorm);
  AuditReport fwd = audit_new_multistep_forward(run, 0.5, Gauge::linear(1.0), kNorm);
  for (std::size_t i = 0; i < fwd.size(); ++i) {
    CHECK(fwd.lhs[i] == 0.0);
    CHECK(fwd.rhs[i] == 0.0);
  }
  CHECK(fwd.violation_count() == 0);
}

TEST_CASE("corrupting delta far below its certified value trips the audits") {
  // True ratio 1/2; corrupted certificate delta = 0.1 with the matching
  // certificate-style gauge slope 2 * 0.1. Expected first violations were
  // derived in closed form from the per-step factors 3/4, 27/64 and 7/16.
  Mapping map = halving();
  const double corrupted = 0.1;
  const Gauge gauge = Gauge::linear(0.2);
  Stopping stopping{0.0, 50, 1e12};

  CoupledRun ms = couple(map, mann_half(), new_multistep3(), Vec{1.0}, stopping, kNorm);
  AuditReport fwd = audit_new_multistep_forward(ms, corrupted, gauge, kNorm);
  REQUIRE(fwd.first_violation.has_value());
  CHECK(*fwd.first_violation == 0);
  CHECK(fwd.lhs[0] == doctest::Approx(0.328125).epsilon(1e-14));
  CHECK(fwd.rhs[0] == doctest::Approx(0.30575).epsilon(1e-12));

  AuditReport bwd = audit_new_multistep_backward(ms, corrupted, gauge, kNorm);
  REQUIRE(bwd.first_violation.has_value());
  CHECK(*bwd.first_violation == 0);
  CHECK(bwd.rhs[0] == doctest::Approx(0.26875).epsilon(1e-12));

  CoupledRun s = couple(map, mann_half(), s_iteration_half(), Vec{1.0}, stopping, kNorm);
  // The forward S-iteration estimate keeps positive slack even with the
  // corrupted ratio: its Mann-residual term dominates on this map.
  AuditReport s_fwd = audit_s_iteration_forward(s, corrupted, gauge, kNorm);
  CHECK(s_fwd.violation_count() == 0);
  CHECK(s_fwd.min_slack > 0.0);

  AuditReport s_bwd = audit_s_iteration_backward(s, corrupted, gauge, kNorm);
  REQUIRE(s_bwd.first_violation.has_value());
  CHECK(*s_bwd.first_violation == 1);
  CHECK(s_bwd.lhs[1] == doctest::Approx(0.37109375).epsilon(1e-14));
  CHECK(s_bwd.rhs[1] == doctest::Approx(0.30859375).epsilon(1e-12));
}

TEST_CASE("a flip involution separates the reference from the target") {
  // T(x) = 1 - x has Lipschitz constant 1 (no valid certificate). With
  // alpha = 1 the reference degenerates to an oscillating image iteration
  // while the target settles on 1/2, so the gap stagnates.
  Mapping flip = make_affine_map("flip", Box({0.0}, {1.0}), {{-1.0}}, {1.0}, Vec{0.5});
  ParameterSchedule one = ParameterSchedule::constant(1.0);
  std::vector<ParameterSchedule> betas{kHalf};
  SchemeConfig reference = make_scheme(Family::mann, one, {}, 0);
  SchemeConfig target = make_scheme(Family::new_multistep, one, betas, 2);
  CoupledRun run = couple(flip, reference, target, Vec{0.25}, Stopping{1e-10, 60, 1e12}, kNorm);
  CHECK(run.reference.stop_reason == StopReason::max_iters);
  CHECK(run.target.stop_reason == StopReason::tolerance);
  CHECK(run.outcome == CoupleOutcome::counterexample_flag);
  CHECK(run.gap.back() == 0.25);
}

TEST_CASE("audit reports are recomputable bit for bit") {
  Mapping map = affine2d();
  CoupledRun run = couple(map, mann_half(), new_multistep3(), Vec{-2.0, 1.0},
                          Stopping{1e-10, 10000, 1e12}, kNorm);
  AuditReport first = audit_new_multistep_forward(run, 0.9, Gauge::linear(1.8), kNorm);
  AuditReport second = audit_new_multistep_forward(run, 0.9, Gauge::linear(1.8), kNorm);
  REQUIRE(first.size() == second.size());
  for (std::size_t i = 0; i < first.size(); ++i) CHECK(first.slack[i] == second.slack[i]);
}

TEST_CASE("audits reject mismatched scheme pairings") {
  Mapping map = halving();
  const Gauge gauge = Gauge::linear(1.0);
  CoupledRun ms = couple(map, mann_half(), new_multistep3(), Vec{1.0},
                         Stopping{1e-10, 50, 1e12}, kNorm);
  CHECK_THROWS_AS(audit_s_iteration_forward(ms, 0.5, gauge, kNorm), Error);

  CoupledRun s = couple(map, mann_half(), s_iteration_half(), Vec{1.0},
                        Stopping{1e-10, 50, 1e12}, kNorm);
  CHECK_THROWS_AS(audit_new_multistep_backward(s, 0.5, gauge, kNorm), Error);

  std::vector<ParameterSchedule> betas{kHalf};
  SchemeConfig ishikawa = make_scheme(Family::ishikawa, kHalf, betas, 0);
  CoupledRun ish = couple(map, mann_half(), ishikawa, Vec{1.0},
                          Stopping{1e-10, 50, 1e12}, kNorm);
  CHECK_THROWS_AS(audit_new_multistep_forward(ish, 0.5, gauge, kNorm), Error);
  CHECK(applicable_audits(ish, 0.5, gauge, kNorm).empty());
  CHECK(applicable_audits(ms, 0.5, gauge, kNorm).size() == 2);

  CHECK_THROWS_AS(audit_new_multistep_forward(ms, 1.0, gauge, kNorm), Error);
}

TEST_CASE("ten-scheme suite on the halving map") {
  Mapping map = halving();
  SuiteResult result = equivalence_suite(map, Vec{1.0}, kHalf, kHalf, 3,
                                       Stopping{1e-10, 10000, 1e12}, kNorm, 0.5,
                                       Gauge::linear(1.0), 1e-8);
  REQUIRE(result.rows.size() == 10);
  CHECK(result.pass);
  CHECK(result.fixed_point == Vec{0.0});

  // Fixed row order.
  const char* expected_order[] = {"picard",       "krasnoselskij", "mann",
                                  "ishikawa",     "new_two_step",  "noor",
                                  "sp",           "multistep",     "new_multistep",
                                  "s_iteration"};
  for (std::size_t i = 0; i < 10; ++i)
    CHECK(std::string(family_name(result.rows[i].family)) == expected_order[i]);

  std::size_t audited_rows = 0;
  for (const SuiteRow& row : result.rows) {
    CHECK(row.final_fp_error < 1e-8);
    CHECK(row.stop_reason == StopReason::tolerance);
    CHECK(row.iterations <= 400);
    CHECK(row.gap_tail < 1e-6);
    CHECK(row.audit_violations() == 0);
    if (!row.audits.empty()) {
      ++audited_rows;
      CHECK(row.audits.size() == 2);
    }
  }
  // Mann-form rows and the new-multistep family carry both one-step audits;
  // the S-iteration row carries its own pair.
  CHECK(audited_rows == 7);
}

TEST_CASE("suite from the fixed point has identically zero gaps") {
  Mapping map = affine2d();
  Vec p = *map.known_fixed_point();
  SuiteResult result = equivalence_suite(map, p, kHalf, kHalf, 3, Stopping{1e-10, 100, 1e12},
                                       kNorm, 0.9, Gauge::linear(1.8), 1e-7);
  CHECK(result.pass);
  for (const SuiteRow& row : result.rows) {
    CHECK(row.gap_tail == 0.0);
    CHECK(row.final_fp_error == 0.0);
  }
}

TEST_CASE("suite validates its schedules") {
  Mapping map = halving();
  CHECK_THROWS_AS(equivalence_suite(map, Vec{1.0}, ParameterSchedule::harmonic(2.0), kHalf, 3,
                                  Stopping{}, kNorm, 0.5, Gauge::linear(1.0), 1e-7),
                  Error);
  CHECK_THROWS_AS(equivalence_suite(map, Vec{1.0}, ParameterSchedule::constant(0.5, 0.0), kHalf, 3,
                                  Stopping{}, kNorm, 0.5, Gauge::linear(1.0), 1e-7),
                  Error);
}

TEST_CASE("suite CSV bodies are identical across thread caps") {
  Mapping map = halving();
  auto run_with_threads = [&](const char* threads) {
    setenv("FIXPOINT_LAB_THREADS", threads, 1);
    SuiteResult result = equivalence_suite(map, Vec{1.0}, kHalf, kHalf, 3,
                                         Stopping{1e-10, 10000, 1e12}, kNorm, 0.5,
                                         Gauge::linear(1.0), 1e-8);
    unsetenv("FIXPOINT_LAB_THREADS");
    return suite_csv(result);
  };
  CHECK(run_with_threads("1") == run_with_threads("4"));
}
