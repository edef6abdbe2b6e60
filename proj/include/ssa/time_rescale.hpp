#pragma once

#include "ssa/rng.hpp"
#include "ssa/types.hpp"

namespace ssa {

/// Converts a pending firing time drawn at rate `r_old` into one at rate
/// `r_new` after an event at `t_fire`, reusing the overshoot:
///
///   t_new = (t_old - t_fire) * r_old / r_new + t_fire
///
/// Returns kNever when r_new == 0. The result is never below t_fire.
/// Requires r_old > 0; a clock re-enabled from rate 0 must be redrawn
/// instead (see reschedule()).
inline Time rescale_time(Time t_old, Time t_fire, double r_old, double r_new) {
  SSA_EXPECTS(r_old > 0.0, "rescale_time needs a positive old rate");
  SSA_EXPECTS(t_old >= t_fire, "pending time lies before the firing time");
  if (r_new <= 0.0) return kNever;
  if (r_new == r_old) return t_old;
  return (t_old - t_fire) * (r_old / r_new) + t_fire;
}

/// New scheduled time for a clock whose rate changed from r_old to r_new
/// during an event at `now`. Handles the disabled cases: 0 -> r draws fresh,
/// r -> 0 disables, 0 -> 0 stays disabled.
inline Time reschedule(Time t_old, Time now, double r_old, double r_new,
                       RngStream& rng) {
  if (r_new <= 0.0) return kNever;
  if (r_old <= 0.0) return now + rng.exponential(r_new);
  return rescale_time(t_old, now, r_old, r_new);
}

}  // namespace ssa
