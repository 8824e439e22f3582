#pragma once

#include "fxl/schemes.hpp"

namespace fxl {

enum class CoupleOutcome {
  both_converged_same_p,
  gap_to_zero,
  counterexample_flag,
  inconclusive,
};

const char* couple_outcome_name(CoupleOutcome outcome) noexcept;

/// Two schemes advanced in lockstep from one starting point. Both sides
/// always have the same number of iterates; the joint run stops once both
/// residuals meet the tolerance (or a guard fires), so gap entries exist for
/// every recorded index.
struct CoupledRun {
  Trajectory reference;  // the u-sequence, Mann-form in the audited pairings
  Trajectory target;     // the x-sequence
  Vec gap;               // ||u_n - x_n|| per index
  CoupleOutcome outcome = CoupleOutcome::inconclusive;
  double floor_a = 0.0;  // declared alpha floor A shared by both sides

  std::size_t length() const noexcept { return gap.size(); }
  double gap_tail_max() const noexcept;
};

/// Requires structurally identical alpha schedules on both sides with a
/// declared floor A > 0.
CoupledRun couple(const Mapping& map, const SchemeConfig& reference, const SchemeConfig& target,
                  std::span<const double> x0, const Stopping& stopping, const Norm& norm);

}  // namespace fxl
