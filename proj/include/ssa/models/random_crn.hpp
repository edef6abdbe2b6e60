#pragma once

#include <cstdint>
#include <vector>

#include "ssa/process_model.hpp"

namespace ssa::models {

struct RandomCrnParams {
  std::size_t reactions = 1000;
  /// Each reaction affects m others, m uniform on {1, ..., max_fanout}.
  std::size_t max_fanout = 30;
  double max_propensity = 2.0;
  /// Seeds the network: initial propensities and dependency lists.
  std::uint64_t structure_seed = 1;
};

/// Synthetic reaction network for benchmarking: only propensities are
/// tracked. Firing reaction l redraws the propensity of l and of each
/// reaction on its dependency list from U[0, max_propensity).
class RandomCrn final : public ProcessModel {
 public:
  explicit RandomCrn(RandomCrnParams params);

  std::string_view name() const override { return "crn"; }
  std::size_t clock_count() const override { return propensity_.size(); }
  std::size_t state_dim() const override { return propensity_.size(); }
  double rate(ClockId clock) const override {
    SSA_EXPECTS(clock < propensity_.size(), "clock id out of range");
    return propensity_[clock];
  }
  std::span<const ClockId> apply_event(ClockId clock, RngStream& rng) override;
  const DependencyGraph& dependencies() const override { return graph_; }
  /// Events applied so far.
  double observable() const override { return static_cast<double>(fired_); }
  std::unique_ptr<ProcessModel> clone() const override {
    return std::make_unique<RandomCrn>(*this);
  }

  double max_propensity() const { return max_propensity_; }

 private:
  std::vector<double> propensity_;
  double max_propensity_;
  DependencyGraph graph_;
  std::uint64_t fired_ = 0;
};

}  // namespace ssa::models
