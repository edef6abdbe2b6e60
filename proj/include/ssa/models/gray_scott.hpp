#pragma once

#include <cstdint>
#include <vector>

#include "ssa/process_model.hpp"

namespace ssa::models {

struct GrayScottParams {
  /// Grid side K; the model has 6 K^2 clocks.
  std::size_t side = 10;
  double omega = 250.0;
  double k_f = 0.0055;
  /// Listed with the reaction scheme; the clock rates below use k_f for V
  /// decay and do not read it.
  double k_2 = 0.0205;
  double d_u = 0.001;
  double d_v = 0.002;
  double k1_hat = 1.0;
  double u0_hat = 1.0;

  /// Initial condition: U = initial_u everywhere (negative means
  /// round(u0_hat * omega)); V = patch_v on a centered square of side
  /// patch_side (0 means max(1, K / 10)), zero elsewhere.
  std::int64_t initial_u = -1;
  std::int64_t patch_v = 25;
  std::size_t patch_side = 0;
};

/// Stochastic Gray-Scott reaction-diffusion on a K x K grid of well-mixed
/// subvolumes. Each subvolume carries six clocks:
///
///   0  U + 2V -> 3V   U V^2 k1_hat / omega^2
///   1  U -> 0         U k_f
///   2  V -> 0         V k_f
///   3  0 -> U         k_f u0_hat omega
///   4  U hops         U d_u   (to a uniform one of 4 neighbours)
///   5  V hops         V d_v
///
/// A molecule hopping off the grid leaves the system.
class GrayScottGrid final : public ProcessModel {
 public:
  enum Channel : std::uint32_t {
    kReaction = 0,
    kUDecay = 1,
    kVDecay = 2,
    kUBirth = 3,
    kUHop = 4,
    kVHop = 5,
  };
  static constexpr std::size_t kChannels = 6;

  explicit GrayScottGrid(GrayScottParams params);

  std::string_view name() const override { return "gray-scott"; }
  std::size_t clock_count() const override { return kChannels * u_.size(); }
  std::size_t state_dim() const override { return 2 * u_.size(); }
  double rate(ClockId clock) const override;
  std::span<const ClockId> apply_event(ClockId clock, RngStream& rng) override;
  const DependencyGraph& dependencies() const override { return graph_; }
  /// Total V molecules.
  double observable() const override;
  std::unique_ptr<ProcessModel> clone() const override {
    return std::make_unique<GrayScottGrid>(*this);
  }

  std::size_t side() const { return side_; }
  const GrayScottParams& params() const { return params_; }
  std::int64_t u(std::size_t row, std::size_t col) const { return u_[row * side_ + col]; }
  std::int64_t v(std::size_t row, std::size_t col) const { return v_[row * side_ + col]; }
  std::int64_t& u_at(std::size_t row, std::size_t col) { return u_[row * side_ + col]; }
  std::int64_t& v_at(std::size_t row, std::size_t col) { return v_[row * side_ + col]; }
  std::int64_t total_molecules() const;
  bool counts_nonnegative() const;

  static ClockId clock_of(std::size_t cell, Channel ch) {
    return static_cast<ClockId>(kChannels * cell + ch);
  }

 private:
  void hop(std::vector<std::int64_t>& counts, std::size_t cell, RngStream& rng);

  GrayScottParams params_;
  std::size_t side_;
  double reaction_scale_;
  double birth_rate_;
  std::vector<std::int64_t> u_;
  std::vector<std::int64_t> v_;
  DependencyGraph graph_;
};

}  // namespace ssa::models
