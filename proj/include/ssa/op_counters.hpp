#pragma once

#include <cstdint>

namespace ssa {

/// Per-run operation tallies. Every field only grows during a run.
struct OpCounters {
  std::uint64_t events = 0;
  /// Linear-search comparisons (HLM bucket scans, DM/FRM/CRM scans).
  std::uint64_t comparisons = 0;
  /// HLM record updates that changed bucket (unlink + push front).
  std::uint64_t moves_with_relink = 0;
  /// HLM record updates that stayed in the same bucket.
  std::uint64_t moves_without_relink = 0;
  /// NRM levels moved by sift-up / sift-down.
  std::uint64_t heap_swaps = 0;
  /// HLM bucket advances, one per bucket left behind.
  std::uint64_t bucket_iterations = 0;
  /// HLM window redistributions, including the initial one.
  std::uint64_t redistributions = 0;
  /// CRM rejected (Z1, Z2) proposals.
  std::uint64_t rejections = 0;

  std::uint64_t moves() const { return moves_with_relink + moves_without_relink; }

  /// Comparisons plus moves: the per-event operation count reported for HLM.
  std::uint64_t search_and_moves() const { return comparisons + moves(); }

  OpCounters& operator+=(const OpCounters& o) {
    events += o.events;
    comparisons += o.comparisons;
    moves_with_relink += o.moves_with_relink;
    moves_without_relink += o.moves_without_relink;
    heap_swaps += o.heap_swaps;
    bucket_iterations += o.bucket_iterations;
    redistributions += o.redistributions;
    rejections += o.rejections;
    return *this;
  }

  friend bool operator==(const OpCounters&, const OpCounters&) = default;
};

/// Ratio helper; 0 when no events happened.
inline double per_event(std::uint64_t count, std::uint64_t events) {
  return events == 0 ? 0.0 : static_cast<double>(count) / static_cast<double>(events);
}

}  // namespace ssa
