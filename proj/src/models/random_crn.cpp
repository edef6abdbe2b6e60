#include "ssa/models/random_crn.hpp"

#include <algorithm>

namespace ssa::models {

RandomCrn::RandomCrn(RandomCrnParams params) : max_propensity_(params.max_propensity) {
  const std::size_t m = params.reactions;
  if (m == 0) throw std::invalid_argument("reaction network needs at least one reaction");
  if (params.max_fanout == 0) throw std::invalid_argument("max fan-out must be positive");
  if (!(max_propensity_ > 0.0)) throw std::invalid_argument("max propensity must be positive");

  RngStream rng(params.structure_seed);
  propensity_.resize(m);
  for (double& a : propensity_) a = max_propensity_ * rng.uniform();

  // Targets are drawn without replacement from the other m - 1 reactions.
  std::vector<std::vector<ClockId>> adjacency(m);
  for (std::size_t i = 0; i < m; ++i) {
    auto& list = adjacency[i];
    list.push_back(static_cast<ClockId>(i));
    const std::size_t fanout =
        std::min<std::size_t>(1 + rng.uniform_index(params.max_fanout), m - 1);
    while (list.size() < fanout + 1) {
      const auto j = static_cast<ClockId>(rng.uniform_index(m));
      if (std::find(list.begin(), list.end(), j) == list.end()) list.push_back(j);
    }
  }
  graph_ = DependencyGraph(adjacency);
}

std::span<const ClockId> RandomCrn::apply_event(ClockId clock, RngStream& rng) {
  auto affected = graph_.out_edges(clock);
  for (ClockId j : affected) propensity_[j] = max_propensity_ * rng.uniform();
  ++fired_;
  return affected;
}

}  // namespace ssa::models
