#include "fxl/schemes.hpp"

#include <cmath>
#include <limits>

namespace fxl {

const char* family_name(Family family) noexcept {
  switch (family) {
    case Family::picard: return "picard";
    case Family::krasnoselskij: return "krasnoselskij";
    case Family::mann: return "mann";
    case Family::ishikawa: return "ishikawa";
    case Family::new_two_step: return "new_two_step";
    case Family::noor: return "noor";
    case Family::sp: return "sp";
    case Family::multistep: return "multistep";
    case Family::new_multistep: return "new_multistep";
    case Family::s_iteration: return "s_iteration";
  }
  return "unknown";
}

Family family_from_name(std::string_view name) {
  for (Family f : {Family::picard, Family::krasnoselskij, Family::mann, Family::ishikawa,
                   Family::new_two_step, Family::noor, Family::sp, Family::multistep,
                   Family::new_multistep, Family::s_iteration}) {
    if (name == family_name(f)) return f;
  }
  raise(ErrorCode::unknown_family, "unknown scheme family '" + std::string(name) + "'");
}

namespace {

int fixed_k(Family family) {
  switch (family) {
    case Family::picard:
    case Family::krasnoselskij:
    case Family::mann:
    case Family::ishikawa:
    case Family::new_two_step:
    case Family::s_iteration:
      return 2;
    case Family::noor:
    case Family::sp:
      return 3;
    default:
      return 0;  // free
  }
}

std::size_t required_betas(Family family) {
  switch (family) {
    case Family::picard:
    case Family::krasnoselskij:
    case Family::mann:
      return 0;
    case Family::ishikawa:
    case Family::new_two_step:
    case Family::s_iteration:
      return 1;
    case Family::noor:
    case Family::sp:
      return 2;
    default:
      return std::numeric_limits<std::size_t>::max();  // k - 1
  }
}

// next = a + t * (b - a); reproduces a bit-exactly whenever a == b, so a
// trajectory started at a fixed point stays there under any schedule.
Vec combine(std::span<const double> a, std::span<const double> b, double t) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + t * (b[i] - a[i]);
  return out;
}

}  // namespace

SchemeConfig make_scheme(Family family) {
  if (family != Family::picard)
    raise(ErrorCode::invalid_argument,
          std::string(family_name(family)) + " needs explicit schedules");
  SchemeConfig config;
  config.family = Family::picard;
  config.k = 2;
  config.alpha = ParameterSchedule::constant(1.0);
  return config;
}

SchemeConfig make_scheme(Family family, const ParameterSchedule& alpha,
                         std::span<const ParameterSchedule> betas, int k) {
  SchemeConfig config;
  config.family = family;

  if (int forced = fixed_k(family); forced != 0) {
    config.k = forced;
  } else {
    if (k < 2) raise(ErrorCode::invalid_argument, "multistep families require k >= 2");
    config.k = k;
  }

  std::size_t need = required_betas(family);
  if (need == std::numeric_limits<std::size_t>::max()) need = static_cast<std::size_t>(config.k - 1);
  if (betas.size() != need)
    raise(ErrorCode::invalid_argument, std::string(family_name(family)) + " expects " +
                                           std::to_string(need) + " beta schedule(s)");
  config.betas.assign(betas.begin(), betas.end());

  switch (family) {
    case Family::picard:
      config.alpha = ParameterSchedule::constant(1.0);
      break;
    case Family::krasnoselskij:
      if (alpha.kind() != ParameterSchedule::Kind::constant)
        raise(ErrorCode::invalid_argument, "krasnoselskij requires a constant alpha schedule");
      config.alpha = alpha;
      break;
    default:
      config.alpha = alpha;
      break;
  }
  return config;
}

SchemeConfig expand_reduction(const SchemeConfig& config) {
  const ParameterSchedule zero = ParameterSchedule::constant(0.0);
  SchemeConfig out = config;
  switch (config.family) {
    case Family::picard:
      out.family = Family::multistep;
      out.k = 2;
      out.alpha = ParameterSchedule::constant(1.0);
      out.betas = {zero};
      return out;
    case Family::krasnoselskij:
    case Family::mann:
      out.family = Family::multistep;
      out.k = 2;
      out.betas = {zero};
      return out;
    case Family::ishikawa:
      out.family = Family::multistep;
      out.k = 2;
      return out;
    case Family::noor:
      out.family = Family::multistep;
      out.k = 3;
      return out;
    case Family::new_two_step:
      out.family = Family::new_multistep;
      out.k = 2;
      return out;
    case Family::sp:
      out.family = Family::new_multistep;
      out.k = 3;
      return out;
    case Family::multistep:
    case Family::new_multistep:
    case Family::s_iteration:
      return out;
  }
  raise(ErrorCode::unknown_family, "unknown scheme family");
}

bool is_mann_form(const SchemeConfig& config) {
  SchemeConfig e = expand_reduction(config);
  if (e.family == Family::s_iteration) return false;
  if (e.k != 2) return false;
  const ParameterSchedule& beta = e.betas.front();
  return beta.kind() == ParameterSchedule::Kind::constant && beta.constant_value() == 0.0;
}

std::optional<SchemeConfig> as_new_multistep_form(const SchemeConfig& config) {
  SchemeConfig e = expand_reduction(config);
  if (e.family == Family::new_multistep) return e;
  if (e.family != Family::multistep) return std::nullopt;
  for (const ParameterSchedule& beta : e.betas) {
    if (beta.kind() != ParameterSchedule::Kind::constant || beta.constant_value() != 0.0)
      return std::nullopt;
  }
  e.family = Family::new_multistep;
  return e;
}

StepOutcome step_multistep(const Mapping& map, std::span<const double> x, double alpha,
                           std::span<const double> betas) {
  const std::size_t levels = betas.size();  // k - 1
  if (levels == 0) raise(ErrorCode::invalid_argument, "multistep step needs k >= 2");
  StepRecord record;
  record.alpha = alpha;
  record.betas.assign(betas.begin(), betas.end());
  record.tx = map.evaluate(x);
  record.y.resize(levels);
  record.ty.resize(levels);

  // Topmost auxiliary level combines x with T x; every lower level combines
  // x with the image of the level above it.
  record.y[levels - 1] = combine(x, record.tx, betas[levels - 1]);
  record.ty[levels - 1] = map.evaluate(record.y[levels - 1]);
  for (std::size_t i = levels - 1; i-- > 0;) {
    record.y[i] = combine(x, record.ty[i + 1], betas[i]);
    record.ty[i] = map.evaluate(record.y[i]);
  }
  Vec next = combine(x, record.ty[0], alpha);
  return {std::move(next), std::move(record)};
}

StepOutcome step_new_multistep(const Mapping& map, std::span<const double> x, double alpha,
                               std::span<const double> betas) {
  const std::size_t levels = betas.size();
  if (levels == 0) raise(ErrorCode::invalid_argument, "new multistep step needs k >= 2");
  StepRecord record;
  record.alpha = alpha;
  record.betas.assign(betas.begin(), betas.end());
  record.tx = map.evaluate(x);
  record.y.resize(levels);
  record.ty.resize(levels);

  // Each level combines the level above with its own image; the update does
  // the same with the lowest level.
  record.y[levels - 1] = combine(x, record.tx, betas[levels - 1]);
  record.ty[levels - 1] = map.evaluate(record.y[levels - 1]);
  for (std::size_t i = levels - 1; i-- > 0;) {
    record.y[i] = combine(record.y[i + 1], record.ty[i + 1], betas[i]);
    record.ty[i] = map.evaluate(record.y[i]);
  }
  Vec next = combine(record.y[0], record.ty[0], alpha);
  return {std::move(next), std::move(record)};
}

StepOutcome step_s_iteration(const Mapping& map, std::span<const double> x, double alpha,
                             double beta) {
  StepRecord record;
  record.alpha = alpha;
  record.betas = {beta};
  record.tx = map.evaluate(x);
  record.y = {combine(x, record.tx, beta)};
  record.ty = {map.evaluate(record.y[0])};

  // The update combines the two images, not the iterate and an image.
  Vec next(x.size());
  for (std::size_t i = 0; i < next.size(); ++i)
    next[i] = record.tx[i] + alpha * (record.ty[0][i] - record.tx[i]);
  return {std::move(next), std::move(record)};
}

const char* stop_reason_name(StopReason reason) noexcept {
  switch (reason) {
    case StopReason::tolerance: return "tolerance";
    case StopReason::max_iters: return "max_iters";
    case StopReason::divergence_guard: return "divergence_guard";
  }
  return "unknown";
}

Trajectory run(const Mapping& map, const SchemeConfig& config, std::span<const double> x0,
               const Stopping& stopping, const Norm& norm, bool record_steps) {
  if (!map.domain().contains(x0))
    raise(ErrorCode::domain_escape, map.label() + ": starting point outside domain");

  const SchemeConfig engine = expand_reduction(config);
  const std::size_t levels = engine.betas.size();
  const auto& fp = map.known_fixed_point();

  Trajectory traj;
  traj.scheme = config;
  traj.fixed_point_known = fp.has_value();

  Vec x(x0.begin(), x0.end());
  Vec beta_values(levels);
  for (std::size_t n = 0;; ++n) {
    if (!all_finite(x))
      raise(ErrorCode::non_finite_value, map.label() + ": iterate became non-finite");
    Vec tx = map.evaluate(x);
    double residual = norm.distance(x, tx);
    traj.iterates.push_back(x);
    traj.residuals.push_back(residual);
    traj.fp_distances.push_back(fp ? norm.distance(x, *fp)
                                   : std::numeric_limits<double>::quiet_NaN());

    if (residual <= stopping.tol) {
      traj.stop_reason = StopReason::tolerance;
      break;
    }
    if (norm(x) > stopping.divergence_bound) {
      traj.stop_reason = StopReason::divergence_guard;
      break;
    }
    if (n >= stopping.max_iters) {
      traj.stop_reason = StopReason::max_iters;
      break;
    }

    double alpha = engine.alpha.value(n);
    for (std::size_t i = 0; i < levels; ++i) beta_values[i] = engine.betas[i].value(n);

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
    if (record_steps) traj.steps.push_back(step.record);
    traj.last_step = std::move(step.record);
    x = std::move(step.next);
  }
  return traj;
}

}  // namespace fxl
