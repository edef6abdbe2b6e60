#pragma once

#include <vector>

#include "ssa/scheduler.hpp"

namespace ssa {

/// Gillespie's first reaction method: every step draws a fresh candidate
/// time for each enabled clock and fires the earliest.
class FirstReactionMethod final : public Scheduler {
 public:
  FirstReactionMethod(std::unique_ptr<ProcessModel> model, std::uint64_t seed);

  Method method() const override { return Method::kFirstReaction; }
  std::optional<std::string> check_invariants() const override;

  /// Exponential draws made so far (one per enabled clock per step).
  std::uint64_t draws() const { return draws_; }

 protected:
  std::optional<Event> next_event(Time horizon) override;

 private:
  std::vector<double> rates_;
  std::uint64_t draws_ = 0;
};

}  // namespace ssa
