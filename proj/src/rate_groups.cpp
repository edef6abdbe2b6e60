#include "ssa/rate_groups.hpp"

#include <cmath>
#include <sstream>

namespace ssa {

RateGroups::RateGroups(std::size_t clocks, int lowest_exponent, std::size_t group_count)
    : lowest_(lowest_exponent),
      groups_(group_count == 0 ? 1 : group_count),
      rates_(clocks, 0.0),
      exponent_(clocks, kNoGroup),
      position_(clocks, 0),
      zero_count_(clocks) {}

int RateGroups::exponent_of(double rate) { return std::ilogb(rate); }

double RateGroups::lower_bound(std::size_t k) const {
  return std::ldexp(1.0, lowest_ + static_cast<int>(k));
}

double RateGroups::upper_bound(std::size_t k) const {
  return std::ldexp(1.0, lowest_ + static_cast<int>(k) + 1);
}

std::optional<std::size_t> RateGroups::group_of(ClockId id) const {
  if (exponent_[id] == kNoGroup) return std::nullopt;
  return static_cast<std::size_t>(exponent_[id] - lowest_);
}

std::size_t RateGroups::slot_for(int exponent) {
  if (exponent < lowest_) {
    const auto extra = static_cast<std::size_t>(lowest_ - exponent);
    groups_.insert(groups_.begin(), extra, Group{});
    lowest_ = exponent;
    extensions_ += extra;
  }
  auto slot = static_cast<std::size_t>(exponent - lowest_);
  if (slot >= groups_.size()) {
    extensions_ += slot + 1 - groups_.size();
    groups_.resize(slot + 1);
  }
  return slot;
}

void RateGroups::remove(ClockId id) {
  if (exponent_[id] == kNoGroup) {
    --zero_count_;
    return;
  }
  Group& g = groups_[static_cast<std::size_t>(exponent_[id] - lowest_)];
  const std::uint32_t pos = position_[id];
  const ClockId last = g.members.back();
  g.members[pos] = last;
  position_[last] = pos;
  g.members.pop_back();
  if (g.members.empty()) {
    total_ -= g.sum;
    g.sum = 0.0;
  } else {
    g.sum -= rates_[id];
    total_ -= rates_[id];
    if (std::abs(g.sum) < 1e-12) {
      const double before = g.sum;
      resum_group(g);
      total_ += g.sum - before;
    }
  }
}

void RateGroups::set(ClockId id, double rate) {
  SSA_EXPECTS(id < rates_.size(), "clock id out of range");
  SSA_EXPECTS(rate >= 0.0 && std::isfinite(rate), "rates must be finite and nonnegative");
  const int e = rate > 0.0 ? exponent_of(rate) : kNoGroup;
  if (e == exponent_[id] && e != kNoGroup) {
    Group& g = groups_[static_cast<std::size_t>(e - lowest_)];
    const double delta = rate - rates_[id];
    g.sum += delta;
    total_ += delta;
    rates_[id] = rate;
    return;
  }
  remove(id);
  rates_[id] = rate;
  exponent_[id] = e;
  if (e == kNoGroup) {
    ++zero_count_;
    return;
  }
  Group& g = groups_[slot_for(e)];
  position_[id] = static_cast<std::uint32_t>(g.members.size());
  g.members.push_back(id);
  g.sum += rate;
  total_ += rate;
}

std::size_t RateGroups::select_group(double target, std::uint64_t& comparisons) const {
  double cumulative = 0.0;
  std::size_t fallback = groups_.size();
  for (std::size_t k = groups_.size(); k-- > 0;) {
    ++comparisons;
    if (groups_[k].members.empty()) continue;
    fallback = k;
    cumulative += groups_[k].sum;
    if (target < cumulative) return k;
  }
  SSA_EXPECTS(fallback < groups_.size(), "composition over empty groups");
  return fallback;
}

ClockId RateGroups::sample_member(std::size_t k, RngStream& rng,
                                  std::uint64_t& rejections) const {
  const Group& g = groups_[k];
  const double bound = upper_bound(k);
  for (;;) {
    const ClockId candidate = g.members[rng.uniform_index(g.members.size())];
    const double z1 = rng.uniform() * bound;
    if (z1 <= rates_[candidate]) return candidate;
    ++rejections;
  }
}

void RateGroups::resum_group(Group& g) {
  double s = 0.0;
  for (ClockId id : g.members) s += rates_[id];
  g.sum = s;
}

void RateGroups::resum() {
  total_ = 0.0;
  for (Group& g : groups_) {
    resum_group(g);
    total_ += g.sum;
  }
}

std::optional<std::string> RateGroups::check(double relative_tolerance) const {
  std::ostringstream os;
  std::size_t seen = 0;
  double total = 0.0;
  for (std::size_t k = 0; k < groups_.size(); ++k) {
    const Group& g = groups_[k];
    double s = 0.0;
    for (std::size_t p = 0; p < g.members.size(); ++p) {
      const ClockId id = g.members[p];
      if (position_[id] != p || group_of(id) != k) {
        os << "membership index broken for clock " << id << " in group " << k;
        return os.str();
      }
      if (rates_[id] < lower_bound(k) || rates_[id] >= upper_bound(k)) {
        os << "clock " << id << " rate " << rates_[id] << " outside group " << k
           << " bounds [" << lower_bound(k) << ", " << upper_bound(k) << ')';
        return os.str();
      }
      s += rates_[id];
    }
    if (std::abs(s - g.sum) > relative_tolerance * std::max(s, 1e-300) &&
        std::abs(s - g.sum) > 1e-12) {
      os << "group " << k << " sum " << g.sum << " differs from recomputed " << s;
      return os.str();
    }
    seen += g.members.size();
    total += s;
  }
  if (seen + zero_count_ != rates_.size()) {
    os << "clock count mismatch: " << seen << " grouped + " << zero_count_
       << " zero != " << rates_.size();
    return os.str();
  }
  if (std::abs(total - total_) > relative_tolerance * std::max(total, 1.0)) {
    os << "R_sum " << total_ << " differs from recomputed " << total;
    return os.str();
  }
  return std::nullopt;
}

}  // namespace ssa
