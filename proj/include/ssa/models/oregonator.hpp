#pragma once

#include <array>
#include <cstdint>

#include "ssa/process_model.hpp"

namespace ssa::models {

struct OregonatorParams {
  std::array<std::int64_t, 3> initial = {500, 1000, 2000};
  // Effective constants with the reservoir species folded in.
  double c1x1 = 2.0;
  double c2 = 0.1;
  double c3x2 = 104.0;
  double c4 = 0.016;
  double c5x3 = 26.0;
};

/// Five-reaction Oregonator on (Y1, Y2, Y3):
///
///   R1  X1 + Y2 -> Y1        a1 = c1X1 Y2
///   R2  Y1 + Y2 -> Z1        a2 = c2 Y1 Y2
///   R3  X2 + Y1 -> 2Y1 + Y3  a3 = c3X2 Y1
///   R4  2Y1 -> Z2            a4 = c4 Y1 (Y1 - 1) / 2
///   R5  X3 + Y3 -> Y2        a5 = c5X3 Y3
class Oregonator final : public ProcessModel {
 public:
  using Counts = std::array<std::int64_t, 3>;
  static constexpr std::array<std::array<int, 3>, 5> kStoichiometry = {{
      {+1, -1, 0},
      {-1, -1, 0},
      {+1, 0, +1},
      {-2, 0, 0},
      {0, +1, -1},
  }};

  explicit Oregonator(OregonatorParams params = {});

  std::string_view name() const override { return "oregonator"; }
  std::size_t clock_count() const override { return 5; }
  std::size_t state_dim() const override { return 3; }
  double rate(ClockId clock) const override;
  std::span<const ClockId> apply_event(ClockId clock, RngStream& rng) override;
  const DependencyGraph& dependencies() const override { return graph_; }
  /// Y1.
  double observable() const override { return static_cast<double>(y_[0]); }
  std::unique_ptr<ProcessModel> clone() const override {
    return std::make_unique<Oregonator>(*this);
  }

  const Counts& counts() const { return y_; }
  Counts& counts() { return y_; }

  static std::array<double, 5> propensities(const Counts& y, const OregonatorParams& p = {});

 private:
  OregonatorParams params_;
  Counts y_;
  DependencyGraph graph_;
};

}  // namespace ssa::models
