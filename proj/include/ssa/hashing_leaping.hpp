#pragma once

#include <vector>

#include "ssa/bucket_table.hpp"
#include "ssa/scheduler.hpp"

namespace ssa {

/// Hashing-leaping method. Firing times are hashed into Q buckets of width
/// tau/Q covering the current window; buckets are drained in order, each by
/// repeated linear minimum search, and the window then leaps by tau with an
/// O(M) redistribution. Affected clocks are rescaled exactly as in the next
/// reaction method, and a record changes chain only when its bucket changes.
class HashingLeapingMethod final : public Scheduler {
 public:
  HashingLeapingMethod(std::unique_ptr<ProcessModel> model, std::uint64_t seed,
                       HlmParams params);

  Method method() const override { return Method::kHashingLeaping; }
  std::optional<std::string> check_invariants() const override;

  const BucketTable& table() const { return table_; }
  /// Bucket currently being drained; Q once the window is exhausted.
  std::size_t current_bucket() const { return current_; }

  /// Drains every remaining bucket of the current window, leaps to the next
  /// window and returns the events fired, in order. now() ends at the old
  /// window end.
  std::vector<Event> step_window();

 protected:
  std::optional<Event> next_event(Time horizon) override;

 private:
  static std::vector<Time> initial_times(const ProcessModel& model, RngStream& rng,
                                         std::vector<double>& rates);
  void fire(ClockId l, Time t);
  void place(ClockId id, Time t) {
    if (table_.move(id, t))
      ++counters_.moves_with_relink;
    else
      ++counters_.moves_without_relink;
    SSA_EXPECTS(table_.bucket_of(id) >= current_, "rescheduled into a drained bucket");
  }

  std::vector<double> rates_;
  BucketTable table_;
  std::size_t current_ = 0;
};

}  // namespace ssa
