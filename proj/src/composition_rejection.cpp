#include "ssa/composition_rejection.hpp"

#include <algorithm>
#include <cmath>

namespace ssa {

int crm_lowest_exponent(const CrmParams& params, double max_initial_rate) {
  SSA_EXPECTS(params.base >= 0.0, "group base must be nonnegative");
  if (params.base > 0.0) return std::ilogb(params.base);
  const int top = max_initial_rate > 0.0 ? std::ilogb(max_initial_rate) : 0;
  return top - static_cast<int>(std::max<std::size_t>(params.groups, 1)) + 1;
}

namespace {

double max_rate(const ProcessModel& model) {
  double best = 0.0;
  for (std::size_t i = 0; i < model.clock_count(); ++i)
    best = std::max(best, model.rate(static_cast<ClockId>(i)));
  return best;
}

}  // namespace

CompositionRejectionMethod::CompositionRejectionMethod(std::unique_ptr<ProcessModel> model,
                                                       std::uint64_t seed, CrmParams params)
    : Scheduler(std::move(model), seed),
      groups_(model_->clock_count(), crm_lowest_exponent(params, max_rate(*model_)),
              params.groups) {
  for (std::size_t i = 0; i < model_->clock_count(); ++i) {
    const auto id = static_cast<ClockId>(i);
    groups_.set(id, model_->rate(id));
  }
  groups_.resum();
}

std::optional<Event> CompositionRejectionMethod::next_event(Time horizon) {
  if (groups_.total() <= 1e-12) groups_.resum();
  if (groups_.total() <= 0.0 || groups_.zero_count() == model_->clock_count()) {
    exhausted_ = true;
    return std::nullopt;
  }
  const Time t = now_ + rng_.exponential(groups_.total());
  if (t > horizon) return std::nullopt;

  const double target = rng_.uniform() * groups_.total();
  const std::size_t k = groups_.select_group(target, counters_.comparisons);
  const ClockId l = groups_.sample_member(k, rng_, counters_.rejections);

  now_ = t;
  for (ClockId j : model_->apply_event(l, rng_)) groups_.set(j, model_->rate(j));
  if (++since_resum_ >= kResumInterval) {
    groups_.resum();
    since_resum_ = 0;
  }
  return Event{t, l};
}

std::optional<std::string> CompositionRejectionMethod::check_invariants() const {
  for (std::size_t i = 0; i < model_->clock_count(); ++i) {
    const auto id = static_cast<ClockId>(i);
    if (groups_.rate(id) != model_->rate(id))
      return "cached rate of clock " + std::to_string(i) + " is stale";
  }
  return groups_.check();
}

}  // namespace ssa
