#include "ssa/direct_method.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace ssa {

LinearSelection select_by_linear_scan(std::span<const double> weights, double target) {
  LinearSelection sel;
  double cumulative = 0.0;
  std::size_t last_positive = weights.size();
  for (std::size_t i = 0; i < weights.size(); ++i) {
    ++sel.comparisons;
    if (weights[i] <= 0.0) continue;
    cumulative += weights[i];
    last_positive = i;
    if (target < cumulative) {
      sel.index = i;
      sel.scanned_total = cumulative;
      return sel;
    }
  }
  SSA_EXPECTS(last_positive < weights.size(), "linear scan over all-zero weights");
  sel.index = last_positive;
  sel.scanned_total = cumulative;
  return sel;
}

DirectMethod::DirectMethod(std::unique_ptr<ProcessModel> model, std::uint64_t seed)
    : Scheduler(std::move(model), seed), rates_(model_->clock_count()) {
  for (std::size_t i = 0; i < rates_.size(); ++i)
    rates_[i] = model_->rate(static_cast<ClockId>(i));
  resum();
}

void DirectMethod::resum() {
  total_ = std::accumulate(rates_.begin(), rates_.end(), 0.0);
  since_resum_ = 0;
}

std::optional<Event> DirectMethod::next_event(Time horizon) {
  if (total_ <= 1e-12) resum();
  if (total_ <= 0.0) {
    exhausted_ = true;
    return std::nullopt;
  }
  const Time t = now_ + rng_.exponential(total_);
  if (t > horizon) return std::nullopt;

  const double target = rng_.uniform() * total_;
  const LinearSelection sel = select_by_linear_scan(rates_, target);
  counters_.comparisons += sel.comparisons;

  const auto l = static_cast<ClockId>(sel.index);
  now_ = t;
  for (ClockId j : model_->apply_event(l, rng_)) {
    const double r = model_->rate(j);
    total_ += r - rates_[j];
    rates_[j] = r;
  }
  if (++since_resum_ >= kResumInterval) resum();
  return Event{t, l};
}

std::optional<std::string> DirectMethod::check_invariants() const {
  if (auto err = check_rate_cache(rates_)) return err;
  const double exact = std::accumulate(rates_.begin(), rates_.end(), 0.0);
  if (std::abs(exact - total_) > 1e-9 * std::max(1.0, exact)) {
    std::ostringstream os;
    os << "R_sum drifted: incremental " << total_ << " vs exact " << exact;
    return os.str();
  }
  return std::nullopt;
}

}  // namespace ssa
