#pragma once

// Array-backed binary min-heap over a fixed id range with a position map,
// so any id can be re-keyed in O(log n).

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ssa/types.hpp"

namespace ssa {

class IndexedMinHeap {
 public:
  IndexedMinHeap() = default;

  /// Heapifies all ids 0..keys.size()-1 with the given keys in O(n).
  explicit IndexedMinHeap(std::span<const Time> keys);

  std::size_t size() const { return heap_.size(); }
  bool empty() const { return heap_.empty(); }

  ClockId top() const { return heap_.front(); }
  Time top_key() const { return keys_[heap_.front()]; }
  Time key(ClockId id) const { return keys_[id]; }
  std::size_t position(ClockId id) const { return pos_[id]; }

  /// Sets the key of `id` and restores heap order from its slot. Returns the
  /// number of levels the element moved.
  std::uint32_t update(ClockId id, Time key);

  /// Heap order and position-map consistency.
  std::optional<std::string> check() const;

 private:
  // Ties on key fall to the lower id.
  bool less(ClockId a, ClockId b) const {
    return keys_[a] < keys_[b] || (keys_[a] == keys_[b] && a < b);
  }
  std::uint32_t sift_up(std::size_t slot);
  std::uint32_t sift_down(std::size_t slot);

  std::vector<Time> keys_;
  std::vector<ClockId> heap_;
  std::vector<std::uint32_t> pos_;
};

}  // namespace ssa
