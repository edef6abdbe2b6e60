#pragma once

#include <vector>

#include "ssa/process_model.hpp"

namespace ssa::models {

/// Clocks with fixed rates whose events change nothing. The analytic laws
/// of the first event (index ~ R_i / R_sum, time ~ Exp(R_sum)) hold exactly.
class ConstantRateModel final : public ProcessModel {
 public:
  explicit ConstantRateModel(std::vector<double> rates);

  std::string_view name() const override { return "constant"; }
  std::size_t clock_count() const override { return rates_.size(); }
  std::size_t state_dim() const override { return 1; }
  double rate(ClockId clock) const override {
    SSA_EXPECTS(clock < rates_.size(), "clock id out of range");
    return rates_[clock];
  }
  std::span<const ClockId> apply_event(ClockId clock, RngStream& rng) override;
  const DependencyGraph& dependencies() const override { return graph_; }
  /// Number of events applied so far.
  double observable() const override { return static_cast<double>(fired_); }
  std::unique_ptr<ProcessModel> clone() const override {
    return std::make_unique<ConstantRateModel>(*this);
  }

 private:
  std::vector<double> rates_;
  DependencyGraph graph_;
  std::uint64_t fired_ = 0;
};

}  // namespace ssa::models
