#include "ssa/models/constant_rate.hpp"

#include <cmath>

namespace ssa::models {

ConstantRateModel::ConstantRateModel(std::vector<double> rates) : rates_(std::move(rates)) {
  if (rates_.empty()) throw std::invalid_argument("constant model needs at least one clock");
  for (double r : rates_)
    if (!(r >= 0.0) || !std::isfinite(r))
      throw std::invalid_argument("constant rates must be finite and nonnegative");
  graph_ = DependencyGraphBuilder(rates_.size()).build();
}

std::span<const ClockId> ConstantRateModel::apply_event(ClockId clock, RngStream&) {
  ++fired_;
  return graph_.out_edges(clock);
}

}  // namespace ssa::models
