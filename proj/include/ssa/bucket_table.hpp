#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ssa/types.hpp"

namespace ssa {

struct HlmParams {
  /// Window length tau.
  double tau = 1.0;
  /// Buckets per window Q.
  std::size_t q = 1;

  void validate() const;
};

/// Scheduled times of all clocks hashed into Q interval buckets covering the
/// current window plus one overflow bucket L. Each bucket is an intrusive
/// doubly linked chain through fixed per-clock records, so a record changes
/// bucket in O(1).
///
/// With window n, w = start + n*tau and width = tau/Q:
///   bucket k  = [w + k*width, w + (k+1)*width),  k = 0..Q-1
///   bucket L  = [w + tau, +inf], index Q
class BucketTable {
 public:
  static constexpr std::uint32_t kNull = UINT32_MAX;

  /// Places every record for window 0 starting at `start`.
  BucketTable(std::span<const Time> times, HlmParams params, Time start = 0.0);

  std::size_t size() const { return records_.size(); }
  std::size_t bucket_count() const { return q_; }
  std::size_t overflow_bucket() const { return q_; }
  std::uint64_t window() const { return window_; }
  Time window_start() const { return window_start_; }
  Time window_end() const { return window_end_; }
  const HlmParams& params() const { return params_; }

  /// Bucket holding time t in the current window; Q for t >= window end or
  /// t == kNever. Requires t >= window_start().
  std::size_t bucket_index(Time t) const {
    SSA_EXPECTS(t >= window_start_, "time lies before the current window");
    if (t >= window_end_) return q_;
    const auto k = static_cast<std::size_t>((t - window_start_) * scale_);
    return k < q_ ? k : q_ - 1;
  }

  std::uint32_t head(std::size_t bucket) const { return heads_[bucket]; }
  std::uint32_t next(ClockId id) const { return records_[id].next; }
  Time time(ClockId id) const { return records_[id].time; }
  std::size_t bucket_of(ClockId id) const { return records_[id].bucket; }
  std::size_t finite_count() const { return finite_count_; }

  /// Sets the record's time. Relinks it to the front of its new bucket only
  /// when the bucket changes; returns whether it did.
  bool move(ClockId id, Time t);

  /// Leaps to the next window and re-hashes every record. Requires buckets
  /// 0..Q-1 to be empty. O(M).
  void advance_window();

  /// Record ids in chain order (front first).
  std::vector<ClockId> chain(std::size_t bucket) const;

  /// Chain integrity: every record on exactly one chain, links mutually
  /// consistent, stored bucket matches the chain and bucket_index(time),
  /// and buckets before `first_live_bucket` are empty.
  std::optional<std::string> check(std::size_t first_live_bucket = 0) const;

 private:
  struct Record {
    Time time = kNever;
    std::uint32_t prev = kNull;
    std::uint32_t next = kNull;
    std::uint32_t bucket = 0;
  };

  void set_window(std::uint64_t n);
  void place_all();
  void unlink(std::uint32_t id);
  void push_front(std::size_t bucket, std::uint32_t id);

  HlmParams params_;
  std::size_t q_;
  Time start_;
  std::uint64_t window_ = 0;
  Time window_start_ = 0.0;
  Time window_end_ = 0.0;
  double scale_ = 0.0;
  std::vector<Record> records_;
  std::vector<std::uint32_t> heads_;
  std::size_t finite_count_ = 0;
};

struct BucketMinimum {
  ClockId clock = 0;
  Time time = kNever;
  /// Records inspected.
  std::uint64_t comparisons = 0;
};

/// Linear minimum search over one chain; equal times go to the lower id.
/// An empty chain gives zero comparisons and time kNever.
inline BucketMinimum scan_bucket(const BucketTable& table, std::size_t bucket) {
  BucketMinimum m;
  for (auto id = table.head(bucket); id != BucketTable::kNull; id = table.next(id)) {
    ++m.comparisons;
    const Time t = table.time(id);
    if (m.comparisons == 1 || t < m.time || (t == m.time && id < m.clock)) {
      m.clock = id;
      m.time = t;
    }
  }
  return m;
}

}  // namespace ssa
