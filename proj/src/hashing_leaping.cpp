#include "ssa/hashing_leaping.hpp"

#include <sstream>

#include "ssa/time_rescale.hpp"

namespace ssa {

std::vector<Time> HashingLeapingMethod::initial_times(const ProcessModel& model,
                                                      RngStream& rng,
                                                      std::vector<double>& rates) {
  std::vector<Time> times(model.clock_count(), kNever);
  rates.resize(model.clock_count());
  for (std::size_t i = 0; i < times.size(); ++i) {
    rates[i] = model.rate(static_cast<ClockId>(i));
    if (rates[i] > 0.0) times[i] = rng.exponential(rates[i]);
  }
  return times;
}

HashingLeapingMethod::HashingLeapingMethod(std::unique_ptr<ProcessModel> model,
                                           std::uint64_t seed, HlmParams params)
    : Scheduler(std::move(model), seed),
      table_(initial_times(*model_, rng_, rates_), params, 0.0) {
  counters_.redistributions = 1;
}

std::optional<Event> HashingLeapingMethod::next_event(Time horizon) {
  const std::size_t q = table_.bucket_count();
  for (;;) {
    if (table_.finite_count() == 0) {
      exhausted_ = true;
      return std::nullopt;
    }
    if (current_ == q) {
      // Everything left is at or beyond the window end.
      if (table_.window_end() > horizon) return std::nullopt;
      table_.advance_window();
      ++counters_.redistributions;
      current_ = 0;
      continue;
    }
    if (table_.head(current_) == BucketTable::kNull) {
      ++current_;
      ++counters_.bucket_iterations;
      continue;
    }
    const BucketMinimum m = scan_bucket(table_, current_);
    counters_.comparisons += m.comparisons;
    if (m.time > horizon) return std::nullopt;
    fire(m.clock, m.time);
    return Event{m.time, m.clock};
  }
}

void HashingLeapingMethod::fire(ClockId l, Time t) {
  now_ = t;
  for (ClockId j : model_->apply_event(l, rng_)) {
    if (j == l) continue;
    const double r_new = model_->rate(j);
    const Time next = reschedule(table_.time(j), t, rates_[j], r_new, rng_);
    rates_[j] = r_new;
    place(j, next);
  }
  const double r_l = model_->rate(l);
  rates_[l] = r_l;
  place(l, r_l > 0.0 ? t + rng_.exponential(r_l) : kNever);
}

std::vector<Event> HashingLeapingMethod::step_window() {
  std::vector<Event> out;
  while (current_ < table_.bucket_count()) {
    if (table_.head(current_) == BucketTable::kNull) {
      ++current_;
      ++counters_.bucket_iterations;
      continue;
    }
    // The current bucket is nonempty, so this fires inside the window.
    out.push_back(*step());
  }
  now_ = table_.window_end();
  table_.advance_window();
  ++counters_.redistributions;
  current_ = 0;
  return out;
}

std::optional<std::string> HashingLeapingMethod::check_invariants() const {
  if (auto err = table_.check(current_)) return err;
  if (auto err = check_rate_cache(rates_)) return err;
  std::ostringstream os;
  for (std::size_t i = 0; i < rates_.size(); ++i) {
    const Time t = table_.time(static_cast<ClockId>(i));
    if ((rates_[i] > 0.0) != (t < kNever)) {
      os << "clock " << i << " has rate " << rates_[i] << " but time " << t;
      return os.str();
    }
    if (t < now_) {
      os << "clock " << i << " is scheduled at " << t << " before now " << now_;
      return os.str();
    }
  }
  return std::nullopt;
}

}  // namespace ssa
