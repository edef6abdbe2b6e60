#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ssa/op_counters.hpp"
#include "ssa/process_model.hpp"
#include "ssa/rng.hpp"
#include "ssa/types.hpp"

namespace ssa {

enum class Method { kDirect, kFirstReaction, kNextReaction, kCompositionRejection, kHashingLeaping };

std::string_view method_name(Method m);
/// Parses "dm", "frm", "nrm", "crm", "hlm". Throws std::invalid_argument.
Method parse_method(std::string_view name);
std::vector<Method> all_methods();

/// Common contract for exact schedulers. A scheduler owns its model, the
/// model's state and a random stream; it is a single-threaded context.
class Scheduler {
 public:
  Scheduler(std::unique_ptr<ProcessModel> model, std::uint64_t seed);
  virtual ~Scheduler() = default;

  Scheduler(const Scheduler&) = delete;
  Scheduler& operator=(const Scheduler&) = delete;

  virtual Method method() const = 0;

  /// Fires the next event if its time is <= horizon. Otherwise leaves the
  /// state untouched, moves the clock to `horizon` (when finite) and returns
  /// nullopt. Also returns nullopt once every rate is zero.
  std::optional<Event> step(Time horizon = kNever);

  /// Steps until the next event would fall after t_end. Returns the number
  /// of events fired.
  std::uint64_t run_until(Time t_end);

  Time now() const { return now_; }
  bool exhausted() const { return exhausted_; }

  const ProcessModel& model() const { return *model_; }
  ProcessModel& model() { return *model_; }
  const OpCounters& counters() const { return counters_; }
  RngStream& rng() { return rng_; }

  /// Verifies every internal structure against the model. Returns a
  /// description of the first violation found.
  virtual std::optional<std::string> check_invariants() const = 0;

 protected:
  virtual std::optional<Event> next_event(Time horizon) = 0;

  /// Shared audit: cached rates match the model.
  std::optional<std::string> check_rate_cache(const std::vector<double>& rates) const;

  std::unique_ptr<ProcessModel> model_;
  RngStream rng_;
  OpCounters counters_;
  Time now_ = 0.0;
  bool exhausted_ = false;
};

}  // namespace ssa
