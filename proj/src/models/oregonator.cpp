#include "ssa/models/oregonator.hpp"

namespace ssa::models {

namespace {

// Which species each propensity reads.
constexpr std::array<std::array<bool, 3>, 5> kReads = {{
    {false, true, false},
    {true, true, false},
    {true, false, false},
    {true, false, false},
    {false, false, true},
}};

}  // namespace

std::array<double, 5> Oregonator::propensities(const Counts& y, const OregonatorParams& p) {
  const auto y1 = static_cast<double>(y[0]);
  const auto y2 = static_cast<double>(y[1]);
  const auto y3 = static_cast<double>(y[2]);
  return {p.c1x1 * y2, p.c2 * y1 * y2, p.c3x2 * y1,
          y[0] >= 2 ? p.c4 * y1 * (y1 - 1.0) / 2.0 : 0.0, p.c5x3 * y3};
}

Oregonator::Oregonator(OregonatorParams params) : params_(params), y_(params.initial) {
  for (auto c : y_)
    if (c < 0) throw std::invalid_argument("molecule counts must be nonnegative");
  DependencyGraphBuilder builder(5);
  for (ClockId i = 0; i < 5; ++i)
    for (ClockId j = 0; j < 5; ++j)
      for (std::size_t s = 0; s < 3; ++s)
        if (kStoichiometry[i][s] != 0 && kReads[j][s]) builder.add_edge(i, j);
  graph_ = builder.build();
}

double Oregonator::rate(ClockId clock) const {
  const auto y1 = static_cast<double>(y_[0]);
  switch (clock) {
    case 0: return params_.c1x1 * static_cast<double>(y_[1]);
    case 1: return params_.c2 * y1 * static_cast<double>(y_[1]);
    case 2: return params_.c3x2 * y1;
    case 3: return y_[0] >= 2 ? params_.c4 * y1 * (y1 - 1.0) / 2.0 : 0.0;
    case 4: return params_.c5x3 * static_cast<double>(y_[2]);
  }
  SSA_EXPECTS(clock < 5, "clock id out of range");
  return 0.0;
}

std::span<const ClockId> Oregonator::apply_event(ClockId clock, RngStream&) {
  SSA_EXPECTS(clock < 5, "clock id out of range");
  for (std::size_t s = 0; s < 3; ++s) {
    y_[s] += kStoichiometry[clock][s];
    SSA_EXPECTS(y_[s] >= 0, "reaction drove a count negative");
  }
  return graph_.out_edges(clock);
}

}  // namespace ssa::models
