#include "ssa/dependency_graph.hpp"

#include <algorithm>
#include <unordered_set>

namespace ssa {

DependencyGraph::DependencyGraph(
    const std::vector<std::vector<ClockId>>& adjacency) {
  const std::size_t m = adjacency.size();
  offsets_.reserve(m + 1);
  offsets_.push_back(0);
  std::unordered_set<ClockId> seen;
  for (std::size_t i = 0; i < m; ++i) {
    const auto self = static_cast<ClockId>(i);
    const auto& list = adjacency[i];
    const bool has_self = std::find(list.begin(), list.end(), self) != list.end();
    if (!has_self) targets_.push_back(self);
    seen.clear();
    for (ClockId j : list) {
      if (j >= m) throw std::invalid_argument("dependency target out of range");
      if (!seen.insert(j).second)
        throw std::invalid_argument("duplicate dependency edge");
      targets_.push_back(j);
    }
    offsets_.push_back(targets_.size());
  }
}

std::size_t DependencyGraph::max_out_degree() const {
  std::size_t best = 0;
  for (std::size_t i = 0; i + 1 < offsets_.size(); ++i)
    best = std::max(best, offsets_[i + 1] - offsets_[i]);
  return best;
}

DependencyGraphBuilder::DependencyGraphBuilder(std::size_t clocks)
    : adjacency_(clocks) {
  for (std::size_t i = 0; i < clocks; ++i)
    adjacency_[i].push_back(static_cast<ClockId>(i));
}

void DependencyGraphBuilder::add_edge(ClockId from, ClockId to) {
  SSA_EXPECTS(from < adjacency_.size() && to < adjacency_.size(),
              "edge endpoint out of range");
  auto& list = adjacency_[from];
  if (std::find(list.begin(), list.end(), to) == list.end()) list.push_back(to);
}

}  // namespace ssa
