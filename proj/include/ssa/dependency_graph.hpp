#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ssa/types.hpp"

namespace ssa {

/// Static directed graph over clocks: out_edges(i) lists every clock whose
/// rate may change when clock i fires, i itself included. Stored in
/// compressed-row form.
class DependencyGraph {
 public:
  DependencyGraph() = default;

  /// Builds from adjacency lists. Inserts i into its own list when missing;
  /// rejects duplicate or out-of-range targets.
  explicit DependencyGraph(const std::vector<std::vector<ClockId>>& adjacency);

  std::size_t clock_count() const {
    return offsets_.empty() ? 0 : offsets_.size() - 1;
  }

  std::span<const ClockId> out_edges(ClockId i) const {
    SSA_EXPECTS(i < clock_count(), "clock id out of range");
    return {targets_.data() + offsets_[i], targets_.data() + offsets_[i + 1]};
  }

  std::size_t out_degree(ClockId i) const { return out_edges(i).size(); }
  std::size_t max_out_degree() const;
  std::size_t edge_count() const { return targets_.size(); }

 private:
  std::vector<std::size_t> offsets_;
  std::vector<ClockId> targets_;
};

/// Incremental builder; add_edge order is preserved with self first.
class DependencyGraphBuilder {
 public:
  explicit DependencyGraphBuilder(std::size_t clocks);
  void add_edge(ClockId from, ClockId to);
  DependencyGraph build() const { return DependencyGraph(adjacency_); }

 private:
  std::vector<std::vector<ClockId>> adjacency_;
};

}  // namespace ssa
