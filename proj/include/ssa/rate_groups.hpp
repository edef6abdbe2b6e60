#pragma once

#include <climits>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ssa/rng.hpp"
#include "ssa/types.hpp"

namespace ssa {

/// Power-of-two rate bins for composition-rejection sampling. Group with
/// exponent e holds the clocks whose rate lies in [2^e, 2^(e+1)). Bounds
/// are fixed up front; a rate outside the current range adds groups at
/// that end and nothing is rebuilt. Zero rates sit outside every group.
class RateGroups {
 public:
  static constexpr int kNoGroup = INT_MIN;

  /// `lowest_exponent` is the exponent of the first group; `group_count`
  /// groups are pre-assigned above it.
  RateGroups(std::size_t clocks, int lowest_exponent, std::size_t group_count);

  /// Inserts, moves or removes `id` so that it sits in the group matching
  /// `rate`; p_k and R_sum are adjusted incrementally.
  void set(ClockId id, double rate);

  double rate(ClockId id) const { return rates_[id]; }
  double total() const { return total_; }
  std::size_t group_count() const { return groups_.size(); }
  int lowest_exponent() const { return lowest_; }

  /// Group index of `id`, or nullopt when its rate is zero.
  std::optional<std::size_t> group_of(ClockId id) const;
  double group_sum(std::size_t k) const { return groups_[k].sum; }
  std::span<const ClockId> members(std::size_t k) const { return groups_[k].members; }
  double lower_bound(std::size_t k) const;
  double upper_bound(std::size_t k) const;
  std::size_t zero_count() const { return zero_count_; }

  /// Number of groups added after construction.
  std::size_t extensions() const { return extensions_; }

  /// Composition step: minimal group (scanning from the heaviest bound down)
  /// whose running sum exceeds `target`. Falls back to the last nonempty
  /// group when rounding overruns.
  std::size_t select_group(double target, std::uint64_t& comparisons) const;

  /// Rejection step inside group k. Draws uniform members Z2 and
  /// Z1 ~ U[0, upper_bound(k)) until Z1 <= R_{Z2}.
  ClockId sample_member(std::size_t k, RngStream& rng, std::uint64_t& rejections) const;

  /// Exact re-summation of every p_k and R_sum.
  void resum();

  std::optional<std::string> check(double relative_tolerance = 1e-9) const;

 private:
  struct Group {
    std::vector<ClockId> members;
    double sum = 0.0;
  };

  static int exponent_of(double rate);
  std::size_t slot_for(int exponent);
  void remove(ClockId id);
  void resum_group(Group& g);

  int lowest_;
  std::vector<Group> groups_;
  std::vector<double> rates_;
  std::vector<int> exponent_;
  std::vector<std::uint32_t> position_;
  double total_ = 0.0;
  std::size_t zero_count_ = 0;
  std::size_t extensions_ = 0;
};

}  // namespace ssa
