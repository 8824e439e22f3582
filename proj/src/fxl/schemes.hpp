#pragma once

#include <optional>
#include <string>

#include "fxl/mapping.hpp"
#include "fxl/norm.hpp"
#include "fxl/schedule.hpp"

namespace fxl {

/// The two multistep families, the S-iteration, and the seven named
/// reductions that expand into them.
enum class Family {
  picard,
  krasnoselskij,
  mann,
  ishikawa,
  new_two_step,
  noor,
  sp,
  multistep,
  new_multistep,
  s_iteration,
};

const char* family_name(Family family) noexcept;
Family family_from_name(std::string_view name);  // throws unknown_family

struct SchemeConfig {
  Family family = Family::mann;
  int k = 2;  // levels for the multistep families (k >= 2)
  ParameterSchedule alpha = ParameterSchedule::constant(0.5);
  std::vector<ParameterSchedule> betas;

  bool operator==(const SchemeConfig&) const = default;
};

/// Validated construction; named reductions get their fixed parameters
/// filled in (Picard: alpha == 1, Mann/Krasnoselskij: beta == 0, ...).
SchemeConfig make_scheme(Family family, const ParameterSchedule& alpha,
                         std::span<const ParameterSchedule> betas, int k);
SchemeConfig make_scheme(Family family);  // picard only (no free parameters)

/// Expands a named reduction to its primitive family (multistep,
/// new_multistep or s_iteration) with the exact stated parameters.
SchemeConfig expand_reduction(const SchemeConfig& config);

bool is_mann_form(const SchemeConfig& config);
/// The config rewritten as a new-multistep configuration when it is one
/// exactly (its own family, or any multistep config with all betas == 0).
std::optional<SchemeConfig> as_new_multistep_form(const SchemeConfig& config);

/// Everything one transition used, kept for inequality audits:
/// schedule values, auxiliary points y^1..y^{k-1} (the S-iteration's single
/// y), their images, and the image of the iterate itself.
struct StepRecord {
  double alpha = 0.0;
  Vec betas;
  std::vector<Vec> y;
  std::vector<Vec> ty;
  Vec tx;
};

struct StepOutcome {
  Vec next;
  StepRecord record;
};

StepOutcome step_multistep(const Mapping& map, std::span<const double> x, double alpha,
                           std::span<const double> betas);
StepOutcome step_new_multistep(const Mapping& map, std::span<const double> x, double alpha,
                               std::span<const double> betas);
StepOutcome step_s_iteration(const Mapping& map, std::span<const double> x, double alpha,
                             double beta);

struct Stopping {
  double tol = 1e-10;
  std::size_t max_iters = 10000;
  double divergence_bound = 1e12;
};

enum class StopReason { tolerance, max_iters, divergence_guard };
const char* stop_reason_name(StopReason reason) noexcept;

struct Trajectory {
  SchemeConfig scheme;
  std::vector<Vec> iterates;
  Vec residuals;      // ||x_n - T x_n|| per iterate
  Vec fp_distances;   // ||x_n - p|| per iterate; NaN when p unknown
  StopReason stop_reason = StopReason::max_iters;
  bool fixed_point_known = false;

  // Full per-transition records when requested, otherwise only the last one.
  std::vector<StepRecord> steps;
  std::optional<StepRecord> last_step;

  std::size_t length() const noexcept { return iterates.size(); }
  std::size_t transitions() const noexcept { return iterates.empty() ? 0 : iterates.size() - 1; }
};

Trajectory run(const Mapping& map, const SchemeConfig& config, std::span<const double> x0,
               const Stopping& stopping, const Norm& norm, bool record_steps = false);

}  // namespace fxl
