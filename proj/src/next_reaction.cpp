#include "ssa/next_reaction.hpp"

#include <sstream>

#include "ssa/time_rescale.hpp"

namespace ssa {

NextReactionMethod::NextReactionMethod(std::unique_ptr<ProcessModel> model,
                                       std::uint64_t seed)
    : Scheduler(std::move(model), seed), rates_(model_->clock_count()) {
  std::vector<Time> times(rates_.size(), kNever);
  for (std::size_t i = 0; i < rates_.size(); ++i) {
    rates_[i] = model_->rate(static_cast<ClockId>(i));
    if (rates_[i] > 0.0) times[i] = now_ + rng_.exponential(rates_[i]);
  }
  heap_ = IndexedMinHeap(times);
}

std::optional<Event> NextReactionMethod::next_event(Time horizon) {
  const ClockId l = heap_.top();
  const Time t = heap_.top_key();
  if (t == kNever) {
    exhausted_ = true;
    return std::nullopt;
  }
  if (t > horizon) return std::nullopt;

  now_ = t;
  for (ClockId j : model_->apply_event(l, rng_)) {
    if (j == l) continue;
    const double r_new = model_->rate(j);
    const Time next = reschedule(heap_.key(j), t, rates_[j], r_new, rng_);
    rates_[j] = r_new;
    counters_.heap_swaps += heap_.update(j, next);
  }
  const double r_l = model_->rate(l);
  rates_[l] = r_l;
  counters_.heap_swaps += heap_.update(l, r_l > 0.0 ? t + rng_.exponential(r_l) : kNever);
  return Event{t, l};
}

std::optional<std::string> NextReactionMethod::check_invariants() const {
  if (auto err = heap_.check()) return err;
  if (auto err = check_rate_cache(rates_)) return err;
  for (std::size_t i = 0; i < rates_.size(); ++i) {
    const Time k = heap_.key(static_cast<ClockId>(i));
    if ((rates_[i] > 0.0) != (k < kNever) || k < now_) {
      std::ostringstream os;
      os << "clock " << i << " has rate " << rates_[i] << " but key " << k
         << " at time " << now_;
      return os.str();
    }
  }
  return std::nullopt;
}

}  // namespace ssa
