#include "ssa/models/gray_scott.hpp"

#include <cmath>
#include <numeric>

namespace ssa::models {

namespace {

constexpr int kRowStep[4] = {-1, 1, 0, 0};
constexpr int kColStep[4] = {0, 0, -1, 1};

}  // namespace

GrayScottGrid::GrayScottGrid(GrayScottParams params)
    : params_(params), side_(params.side) {
  if (side_ == 0) throw std::invalid_argument("grid side must be positive");
  if (!(params.omega > 0.0)) throw std::invalid_argument("omega must be positive");
  reaction_scale_ = params.k1_hat / (params.omega * params.omega);
  birth_rate_ = params.k_f * params.u0_hat * params.omega;

  const std::size_t cells = side_ * side_;
  const std::int64_t u0 = params.initial_u >= 0
                              ? params.initial_u
                              : std::llround(params.u0_hat * params.omega);
  if (params.patch_v < 0) throw std::invalid_argument("patch V count must be nonnegative");
  u_.assign(cells, u0);
  v_.assign(cells, 0);
  const std::size_t patch =
      std::min(side_, params.patch_side > 0 ? params.patch_side : std::max<std::size_t>(1, side_ / 10));
  const std::size_t first = (side_ - patch) / 2;
  for (std::size_t r = first; r < first + patch; ++r)
    for (std::size_t c = first; c < first + patch; ++c) v_at(r, c) = params.patch_v;

  // Every clock touches its own six channels; a hop also touches the three
  // count-dependent channels of its species in each in-grid neighbour.
  std::vector<std::vector<ClockId>> adjacency(clock_count());
  for (std::size_t cell = 0; cell < cells; ++cell) {
    const std::size_t row = cell / side_, col = cell % side_;
    for (std::uint32_t ch = 0; ch < kChannels; ++ch) {
      auto& list = adjacency[kChannels * cell + ch];
      list.push_back(clock_of(cell, static_cast<Channel>(ch)));
      for (std::uint32_t other = 0; other < kChannels; ++other)
        if (other != ch) list.push_back(clock_of(cell, static_cast<Channel>(other)));
      if (ch != kUHop && ch != kVHop) continue;
      const Channel dependent[3] = {kReaction, ch == kUHop ? kUDecay : kVDecay,
                                    static_cast<Channel>(ch)};
      for (int d = 0; d < 4; ++d) {
        const long r = static_cast<long>(row) + kRowStep[d];
        const long c = static_cast<long>(col) + kColStep[d];
        if (r < 0 || c < 0 || r >= static_cast<long>(side_) || c >= static_cast<long>(side_))
          continue;
        const std::size_t nb = static_cast<std::size_t>(r) * side_ + static_cast<std::size_t>(c);
        for (Channel dep : dependent) list.push_back(clock_of(nb, dep));
      }
    }
  }
  graph_ = DependencyGraph(adjacency);
}

double GrayScottGrid::rate(ClockId clock) const {
  SSA_EXPECTS(clock < clock_count(), "clock id out of range");
  const std::size_t cell = clock / kChannels;
  const auto u = static_cast<double>(u_[cell]);
  const auto v = static_cast<double>(v_[cell]);
  switch (clock % kChannels) {
    case kReaction: return u * v * v * reaction_scale_;
    case kUDecay: return u * params_.k_f;
    case kVDecay: return v * params_.k_f;
    case kUBirth: return birth_rate_;
    case kUHop: return u * params_.d_u;
    default: return v * params_.d_v;
  }
}

void GrayScottGrid::hop(std::vector<std::int64_t>& counts, std::size_t cell, RngStream& rng) {
  --counts[cell];
  const auto d = rng.uniform_index(4);
  const long r = static_cast<long>(cell / side_) + kRowStep[d];
  const long c = static_cast<long>(cell % side_) + kColStep[d];
  if (r < 0 || c < 0 || r >= static_cast<long>(side_) || c >= static_cast<long>(side_))
    return;  // absorbed at the boundary
  ++counts[static_cast<std::size_t>(r) * side_ + static_cast<std::size_t>(c)];
}

std::span<const ClockId> GrayScottGrid::apply_event(ClockId clock, RngStream& rng) {
  SSA_EXPECTS(clock < clock_count(), "clock id out of range");
  const std::size_t cell = clock / kChannels;
  switch (clock % kChannels) {
    case kReaction:
      SSA_EXPECTS(u_[cell] > 0, "reaction fired without U");
      --u_[cell];
      ++v_[cell];
      break;
    case kUDecay:
      SSA_EXPECTS(u_[cell] > 0, "U decay fired without U");
      --u_[cell];
      break;
    case kVDecay:
      SSA_EXPECTS(v_[cell] > 0, "V decay fired without V");
      --v_[cell];
      break;
    case kUBirth:
      ++u_[cell];
      break;
    case kUHop:
      SSA_EXPECTS(u_[cell] > 0, "U hop fired without U");
      hop(u_, cell, rng);
      break;
    default:
      SSA_EXPECTS(v_[cell] > 0, "V hop fired without V");
      hop(v_, cell, rng);
      break;
  }
  return graph_.out_edges(clock);
}

double GrayScottGrid::observable() const {
  return static_cast<double>(std::accumulate(v_.begin(), v_.end(), std::int64_t{0}));
}

std::int64_t GrayScottGrid::total_molecules() const {
  return std::accumulate(u_.begin(), u_.end(), std::int64_t{0}) +
         std::accumulate(v_.begin(), v_.end(), std::int64_t{0});
}

bool GrayScottGrid::counts_nonnegative() const {
  for (std::size_t i = 0; i < u_.size(); ++i)
    if (u_[i] < 0 || v_[i] < 0) return false;
  return true;
}

}  // namespace ssa::models
