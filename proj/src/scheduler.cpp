#include "ssa/scheduler.hpp"

#include <sstream>
#include <stdexcept>

namespace ssa {

std::string_view method_name(Method m) {
  switch (m) {
    case Method::kDirect: return "dm";
    case Method::kFirstReaction: return "frm";
    case Method::kNextReaction: return "nrm";
    case Method::kCompositionRejection: return "crm";
    case Method::kHashingLeaping: return "hlm";
  }
  return "?";
}

Method parse_method(std::string_view name) {
  for (Method m : all_methods())
    if (method_name(m) == name) return m;
  throw std::invalid_argument("unknown method '" + std::string(name) + "'");
}

std::vector<Method> all_methods() {
  return {Method::kDirect, Method::kFirstReaction, Method::kNextReaction,
          Method::kCompositionRejection, Method::kHashingLeaping};
}

Scheduler::Scheduler(std::unique_ptr<ProcessModel> model, std::uint64_t seed)
    : model_(std::move(model)), rng_(seed) {
  if (!model_) throw std::invalid_argument("scheduler needs a model");
  if (model_->clock_count() == 0) throw std::invalid_argument("model has no clocks");
}

std::optional<Event> Scheduler::step(Time horizon) {
  if (exhausted_) return std::nullopt;
  auto ev = next_event(horizon);
  if (ev) {
    ++counters_.events;
  } else if (!exhausted_ && horizon < kNever && horizon > now_) {
    now_ = horizon;
  }
  return ev;
}

std::uint64_t Scheduler::run_until(Time t_end) {
  std::uint64_t fired = 0;
  while (step(t_end)) ++fired;
  return fired;
}

std::optional<std::string> Scheduler::check_rate_cache(
    const std::vector<double>& rates) const {
  for (std::size_t i = 0; i < rates.size(); ++i) {
    const double r = model_->rate(static_cast<ClockId>(i));
    if (r != rates[i]) {
      std::ostringstream os;
      os << "cached rate of clock " << i << " is " << rates[i] << ", model says " << r;
      return os.str();
    }
  }
  return std::nullopt;
}

}  // namespace ssa
