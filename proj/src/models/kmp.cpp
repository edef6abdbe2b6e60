#include "ssa/models/kmp.hpp"

#include <cmath>
#include <tuple>

namespace ssa::models {

KmpChain::KmpChain(KmpParams params)
    : t_left_(params.t_left), t_right_(params.t_right) {
  const std::size_t m = params.oscillators;
  if (m == 0) throw std::invalid_argument("KMP chain needs at least one oscillator");
  if (!(t_left_ > 0.0) || !(t_right_ > 0.0))
    throw std::invalid_argument("bath temperatures must be positive");
  if (params.initial.empty()) {
    energy_.resize(m);
    for (std::size_t k = 1; k <= m; ++k)
      energy_[k - 1] = t_left_ + (t_right_ - t_left_) * static_cast<double>(k) /
                                     static_cast<double>(m + 1);
  } else {
    if (params.initial.size() != m)
      throw std::invalid_argument("initial energies must match the oscillator count");
    for (double x : params.initial)
      if (!(x >= 0.0)) throw std::invalid_argument("energies must be nonnegative");
    energy_ = std::move(params.initial);
  }

  DependencyGraphBuilder builder(m + 1);
  for (std::size_t i = 0; i <= m; ++i) {
    const auto c = static_cast<ClockId>(i);
    if (i > 0) builder.add_edge(c, c - 1);
    if (i < m) builder.add_edge(c, c + 1);
  }
  graph_ = builder.build();
}

double KmpChain::rate(ClockId clock) const {
  const std::size_t m = energy_.size();
  SSA_EXPECTS(clock <= m, "clock id out of range");
  const double left = clock == 0 ? t_left_ : energy_[clock - 1];
  const double right = clock == m ? t_right_ : energy_[clock];
  return std::sqrt(left + right);
}

std::span<const ClockId> KmpChain::apply_event(ClockId clock, RngStream& rng) {
  const std::size_t m = energy_.size();
  SSA_EXPECTS(clock <= m, "clock id out of range");
  if (clock == 0) {
    const double bath = rng.exponential(1.0 / t_left_);
    energy_[0] = bath_exchange(energy_[0], bath, rng.uniform_open());
  } else if (clock == m) {
    const double bath = rng.exponential(1.0 / t_right_);
    energy_[m - 1] = bath_exchange(energy_[m - 1], bath, rng.uniform_open());
  } else {
    const double s = energy_[clock - 1] + energy_[clock];
    std::tie(energy_[clock - 1], energy_[clock]) = split(s, rng.uniform_open());
  }
  return graph_.out_edges(clock);
}

}  // namespace ssa::models
