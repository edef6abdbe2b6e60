#include "ssa/first_reaction.hpp"

namespace ssa {

FirstReactionMethod::FirstReactionMethod(std::unique_ptr<ProcessModel> model,
                                         std::uint64_t seed)
    : Scheduler(std::move(model), seed), rates_(model_->clock_count()) {
  for (std::size_t i = 0; i < rates_.size(); ++i)
    rates_[i] = model_->rate(static_cast<ClockId>(i));
}

std::optional<Event> FirstReactionMethod::next_event(Time horizon) {
  Time best = kNever;
  ClockId best_id = 0;
  for (std::size_t i = 0; i < rates_.size(); ++i) {
    if (rates_[i] <= 0.0) continue;
    const Time candidate = now_ + rng_.exponential(rates_[i]);
    ++draws_;
    ++counters_.comparisons;
    if (candidate < best) {
      best = candidate;
      best_id = static_cast<ClockId>(i);
    }
  }
  if (best == kNever) {
    exhausted_ = true;
    return std::nullopt;
  }
  if (best > horizon) return std::nullopt;

  now_ = best;
  for (ClockId j : model_->apply_event(best_id, rng_)) rates_[j] = model_->rate(j);
  return Event{best, best_id};
}

std::optional<std::string> FirstReactionMethod::check_invariants() const {
  return check_rate_cache(rates_);
}

}  // namespace ssa
