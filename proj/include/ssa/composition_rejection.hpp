#pragma once

#include <cstddef>

#include "ssa/rate_groups.hpp"
#include "ssa/scheduler.hpp"

namespace ssa {

struct CrmParams {
  /// Number of pre-assigned groups.
  std::size_t groups = 30;
  /// Lower bound of the lowest group. Rounded down to a power of two.
  /// 0 places the top group over the largest initial rate.
  double base = 0.0;
};

/// Composition-rejection method: Exp(R_sum) holding time, group chosen by a
/// linear scan of group sums, clock chosen by rejection inside the group.
/// No per-clock firing times are stored.
class CompositionRejectionMethod final : public Scheduler {
 public:
  static constexpr std::uint64_t kResumInterval = 1'000'000;

  CompositionRejectionMethod(std::unique_ptr<ProcessModel> model, std::uint64_t seed,
                             CrmParams params = {});

  Method method() const override { return Method::kCompositionRejection; }
  std::optional<std::string> check_invariants() const override;

  const RateGroups& groups() const { return groups_; }

 protected:
  std::optional<Event> next_event(Time horizon) override;

 private:
  RateGroups groups_;
  std::uint64_t since_resum_ = 0;
};

/// Lowest group exponent for a given parameter set and initial rates.
int crm_lowest_exponent(const CrmParams& params, double max_initial_rate);

}  // namespace ssa
