#include "ssa/bucket_table.hpp"

#include <cmath>
#include <sstream>

namespace ssa {

void HlmParams::validate() const {
  if (!(tau > 0.0) || !std::isfinite(tau))
    throw std::invalid_argument("HLM window length tau must be positive and finite");
  if (q < 1) throw std::invalid_argument("HLM bucket count Q must be at least 1");
  if (q >= BucketTable::kNull) throw std::invalid_argument("HLM bucket count Q too large");
}

BucketTable::BucketTable(std::span<const Time> times, HlmParams params, Time start)
    : params_(params), q_(params.q), start_(start), records_(times.size()) {
  params_.validate();
  if (times.size() >= kNull) throw std::invalid_argument("too many clocks for a bucket table");
  heads_.assign(q_ + 1, kNull);
  for (std::size_t i = 0; i < times.size(); ++i) {
    SSA_EXPECTS(times[i] >= start, "initial time before the start time");
    records_[i].time = times[i];
    if (times[i] < kNever) ++finite_count_;
  }
  set_window(0);
  place_all();
}

void BucketTable::set_window(std::uint64_t n) {
  window_ = n;
  window_start_ = start_ + static_cast<double>(n) * params_.tau;
  window_end_ = start_ + static_cast<double>(n + 1) * params_.tau;
  scale_ = static_cast<double>(q_) / params_.tau;
}

void BucketTable::place_all() {
  heads_.assign(q_ + 1, kNull);
  for (std::uint32_t i = 0; i < records_.size(); ++i)
    push_front(bucket_index(records_[i].time), i);
}

void BucketTable::advance_window() {
  for (std::size_t b = 0; b < q_; ++b)
    SSA_EXPECTS(heads_[b] == kNull, "redistribution with undrained buckets");
  set_window(window_ + 1);
  place_all();
}

void BucketTable::unlink(std::uint32_t id) {
  Record& r = records_[id];
  if (r.prev != kNull)
    records_[r.prev].next = r.next;
  else
    heads_[r.bucket] = r.next;
  if (r.next != kNull) records_[r.next].prev = r.prev;
  r.prev = r.next = kNull;
}

void BucketTable::push_front(std::size_t bucket, std::uint32_t id) {
  Record& r = records_[id];
  r.bucket = static_cast<std::uint32_t>(bucket);
  r.prev = kNull;
  r.next = heads_[bucket];
  if (r.next != kNull) records_[r.next].prev = id;
  heads_[bucket] = id;
}

bool BucketTable::move(ClockId id, Time t) {
  Record& r = records_[id];
  const std::size_t b = bucket_index(t);
  finite_count_ += (t < kNever) - (r.time < kNever);
  r.time = t;
  if (b == r.bucket) return false;
  unlink(id);
  push_front(b, id);
  return true;
}

std::vector<ClockId> BucketTable::chain(std::size_t bucket) const {
  std::vector<ClockId> out;
  for (std::uint32_t id = heads_[bucket]; id != kNull; id = records_[id].next)
    out.push_back(id);
  return out;
}

std::optional<std::string> BucketTable::check(std::size_t first_live_bucket) const {
  std::ostringstream os;
  std::vector<char> visited(records_.size(), 0);
  std::size_t finite = 0;
  for (std::size_t b = 0; b <= q_; ++b) {
    if (b < first_live_bucket && b < q_ && heads_[b] != kNull) {
      os << "bucket " << b << " should be drained but holds clock " << heads_[b];
      return os.str();
    }
    std::uint32_t prev = kNull;
    for (std::uint32_t id = heads_[b]; id != kNull; id = records_[id].next) {
      if (id >= records_.size() || visited[id]) {
        os << "chain " << b << " revisits or leaves the table at clock " << id;
        return os.str();
      }
      visited[id] = 1;
      const Record& r = records_[id];
      if (r.prev != prev) {
        os << "clock " << id << " has prev " << r.prev << ", expected " << prev;
        return os.str();
      }
      if (r.bucket != b) {
        os << "clock " << id << " stored bucket " << r.bucket << " but sits on chain " << b;
        return os.str();
      }
      if (r.time < window_start_ || bucket_index(r.time) != b) {
        os << "clock " << id << " time " << r.time << " does not hash to bucket " << b;
        return os.str();
      }
      if (r.time < kNever) ++finite;
      prev = id;
    }
  }
  for (std::size_t i = 0; i < visited.size(); ++i) {
    if (!visited[i]) {
      os << "clock " << i << " is on no chain";
      return os.str();
    }
  }
  if (finite != finite_count_) {
    os << "finite count " << finite_count_ << " but " << finite << " finite records";
    return os.str();
  }
  return std::nullopt;
}

}  // namespace ssa
