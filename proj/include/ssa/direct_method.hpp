#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ssa/scheduler.hpp"

namespace ssa {

struct LinearSelection {
  std::size_t index = 0;
  std::uint64_t comparisons = 0;
  /// Sum of all weights seen by the scan.
  double scanned_total = 0.0;
};

/// Minimal l with target < sum_{i<=l} weights[i]. When rounding puts the
/// target at or past the full sum, the last positive weight is chosen.
LinearSelection select_by_linear_scan(std::span<const double> weights, double target);

/// Gillespie's direct method: Exp(R_sum) holding time, index by linear
/// scan. Only affected rates are recomputed; R_sum is kept incrementally and
/// re-summed exactly every kResumInterval events.
class DirectMethod final : public Scheduler {
 public:
  static constexpr std::uint64_t kResumInterval = 1'000'000;

  DirectMethod(std::unique_ptr<ProcessModel> model, std::uint64_t seed);

  Method method() const override { return Method::kDirect; }
  std::optional<std::string> check_invariants() const override;

  double total_rate() const { return total_; }

 protected:
  std::optional<Event> next_event(Time horizon) override;

 private:
  void resum();

  std::vector<double> rates_;
  double total_ = 0.0;
  std::uint64_t since_resum_ = 0;
};

}  // namespace ssa
