#include "fxl/coupled.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace fxl {

const char* couple_outcome_name(CoupleOutcome outcome) noexcept {
  switch (outcome) {
    case CoupleOutcome::both_converged_same_p: return "both_converged_same_p";
    case CoupleOutcome::gap_to_zero: return "gap_to_zero";
    case CoupleOutcome::counterexample_flag: return "counterexample_flag";
    case CoupleOutcome::inconclusive: return "inconclusive";
  }
  return "unknown";
}

double CoupledRun::gap_tail_max() const noexcept {
  if (gap.empty()) return 0.0;
  std::size_t w = std::max<std::size_t>(1, (gap.size() + 9) / 10);  // last tenth
  double m = 0.0;
  for (std::size_t i = gap.size() - w; i < gap.size(); ++i) m = std::max(m, gap[i]);
  return m;
}

namespace {

struct Side {
  SchemeConfig engine;
  Trajectory traj;
  Vec x;
  Vec beta_values;

  explicit Side(const SchemeConfig& config) : engine(expand_reduction(config)) {
    traj.scheme = config;
    beta_values.resize(engine.betas.size());
  }

  // Returns the residual at the current iterate and records it.
  double observe(const Mapping& map, const Norm& norm, const std::optional<Vec>& fp) {
    Vec tx = map.evaluate(x);
    double residual = norm.distance(x, tx);
    traj.iterates.push_back(x);
    traj.residuals.push_back(residual);
    traj.fp_distances.push_back(fp ? norm.distance(x, *fp)
                                   : std::numeric_limits<double>::quiet_NaN());
    return residual;
  }

  void advance(const Mapping& map, std::size_t n) {
    double alpha = engine.alpha.value(n);
    for (std::size_t i = 0; i < beta_values.size(); ++i) beta_values[i] = engine.betas[i].value(n);
    StepOutcome step;
    switch (engine.family) {
      case Family::multistep:
        step = step_multistep(map, x, alpha, beta_values);
        break;
      case Family::new_multistep:
        step = step_new_multistep(map, x, alpha, beta_values);
        break;
      case Family::s_iteration:
        step = step_s_iteration(map, x, alpha, beta_values[0]);
        break;
      default:
        raise(ErrorCode::unknown_family, "expansion produced a non-primitive family");
    }
    traj.steps.push_back(step.record);
    traj.last_step = std::move(step.record);
    x = std::move(step.next);
    if (!all_finite(x))
      raise(ErrorCode::non_finite_value, map.label() + ": iterate became non-finite");
  }
};

}  // namespace

CoupledRun couple(const Mapping& map, const SchemeConfig& reference, const SchemeConfig& target,
                  std::span<const double> x0, const Stopping& stopping, const Norm& norm) {
  const SchemeConfig ref_engine = expand_reduction(reference);
  const SchemeConfig tgt_engine = expand_reduction(target);
  if (!(ref_engine.alpha == tgt_engine.alpha))
    raise(ErrorCode::scheme_mismatch,
          "coupled schemes must share one alpha schedule (identical values per step)");
  const double floor_a = ref_engine.alpha.floor();
  if (!(floor_a > 0.0))
    raise(ErrorCode::schedule_floor_violated,
          "coupled runs require a declared alpha floor A > 0");
  if (!map.domain().contains(x0))
    raise(ErrorCode::domain_escape, map.label() + ": starting point outside domain");

  CoupledRun run;
  run.floor_a = floor_a;
  Side ref(reference);
  Side tgt(target);
  ref.x.assign(x0.begin(), x0.end());
  tgt.x.assign(x0.begin(), x0.end());
  const auto& fp = map.known_fixed_point();
  ref.traj.fixed_point_known = fp.has_value();
  tgt.traj.fixed_point_known = fp.has_value();

  bool guard_fired = false;
  for (std::size_t n = 0;; ++n) {
    double res_ref = ref.observe(map, norm, fp);
    double res_tgt = tgt.observe(map, norm, fp);
    run.gap.push_back(norm.distance(ref.x, tgt.x));

    if (res_ref <= stopping.tol && res_tgt <= stopping.tol) break;
    if (norm(ref.x) > stopping.divergence_bound || norm(tgt.x) > stopping.divergence_bound) {
      guard_fired = true;
      break;
    }
    if (n >= stopping.max_iters) break;

    ref.advance(map, n);
    tgt.advance(map, n);
  }

  auto finish = [&](Side& side) {
    if (side.traj.residuals.back() <= stopping.tol)
      side.traj.stop_reason = StopReason::tolerance;
    else
      side.traj.stop_reason = guard_fired ? StopReason::divergence_guard : StopReason::max_iters;
  };
  finish(ref);
  finish(tgt);

  bool ref_ok = ref.traj.stop_reason == StopReason::tolerance;
  bool tgt_ok = tgt.traj.stop_reason == StopReason::tolerance;
  run.reference = std::move(ref.traj);
  run.target = std::move(tgt.traj);
  // Limits agree when the final gap is within a small multiple of the
  // stopping tolerance; the gap tail statistic stays available for looser
  // per-experiment thresholds.
  double final_gap = run.gap.back();
  double gap_tol = 10.0 * stopping.tol;
  if (ref_ok && tgt_ok && final_gap <= gap_tol)
    run.outcome = CoupleOutcome::both_converged_same_p;
  else if (final_gap <= gap_tol)
    run.outcome = CoupleOutcome::gap_to_zero;
  else if (ref_ok != tgt_ok)
    run.outcome = CoupleOutcome::counterexample_flag;
  else
    run.outcome = CoupleOutcome::inconclusive;
  return run;
}

}  // namespace fxl
