#pragma once

#include <utility>
#include <vector>

#include "ssa/process_model.hpp"

namespace ssa::models {

struct KmpParams {
  /// Number of oscillators M; the chain has M + 1 clocks.
  std::size_t oscillators = 100;
  double t_left = 1.0;
  double t_right = 2.0;
  /// Initial energies; empty means the linear profile between the bath
  /// temperatures.
  std::vector<double> initial;
};

/// Generalized KMP heat-conduction chain. Clock i (0..M) sits on the pair
/// (x_i, x_{i+1}) with x_0 = T_L, x_{M+1} = T_R and rings at
/// sqrt(x_i + x_{i+1}). An interior ring pools the pair's energy and splits
/// it uniformly; a bath ring pools the edge oscillator with an Exp(mean T)
/// draw and keeps a uniform share of it.
class KmpChain final : public ProcessModel {
 public:
  explicit KmpChain(KmpParams params);

  std::string_view name() const override { return "kmp"; }
  std::size_t clock_count() const override { return energy_.size() + 1; }
  std::size_t state_dim() const override { return energy_.size(); }
  double rate(ClockId clock) const override;
  std::span<const ClockId> apply_event(ClockId clock, RngStream& rng) override;
  const DependencyGraph& dependencies() const override { return graph_; }
  /// Energy of the first oscillator.
  double observable() const override { return energy_.front(); }
  std::unique_ptr<ProcessModel> clone() const override {
    return std::make_unique<KmpChain>(*this);
  }

  std::size_t oscillators() const { return energy_.size(); }
  /// Energy of oscillator k, 1-based as in x_1..x_M.
  double energy(std::size_t k) const { return energy_.at(k - 1); }
  const std::vector<double>& energies() const { return energy_; }
  double t_left() const { return t_left_; }
  double t_right() const { return t_right_; }

  /// Interior repartition of pooled energy s with share p. The larger share
  /// is rounded and the smaller one is s minus it, which is exact because
  /// the larger share lies in [s/2, s]; the parts therefore re-add to s.
  static std::pair<double, double> split(double s, double p) {
    if (p >= 0.5) {
      const double a = p * s;
      return {a, s - a};
    }
    const double b = (1.0 - p) * s;
    return {s - b, b};
  }

  /// Bath exchange: the oscillator keeps p of (x + bath draw).
  static double bath_exchange(double x, double bath, double p) { return p * (x + bath); }

 private:
  std::vector<double> energy_;
  double t_left_;
  double t_right_;
  DependencyGraph graph_;
};

}  // namespace ssa::models
