#include "ssa/indexed_min_heap.hpp"

#include <sstream>

namespace ssa {

IndexedMinHeap::IndexedMinHeap(std::span<const Time> keys)
    : keys_(keys.begin(), keys.end()), heap_(keys.size()), pos_(keys.size()) {
  for (std::size_t i = 0; i < heap_.size(); ++i) {
    heap_[i] = static_cast<ClockId>(i);
    pos_[i] = static_cast<std::uint32_t>(i);
  }
  for (std::size_t i = heap_.size() / 2; i-- > 0;) sift_down(i);
}

std::uint32_t IndexedMinHeap::update(ClockId id, Time key) {
  SSA_EXPECTS(id < keys_.size(), "heap id out of range");
  const Time old = keys_[id];
  keys_[id] = key;
  if (key < old) return sift_up(pos_[id]);
  if (key > old) return sift_down(pos_[id]);
  return 0;
}

std::uint32_t IndexedMinHeap::sift_up(std::size_t slot) {
  const ClockId moving = heap_[slot];
  std::uint32_t levels = 0;
  while (slot > 0) {
    const std::size_t parent = (slot - 1) / 2;
    if (!less(moving, heap_[parent])) break;
    heap_[slot] = heap_[parent];
    pos_[heap_[slot]] = static_cast<std::uint32_t>(slot);
    slot = parent;
    ++levels;
  }
  heap_[slot] = moving;
  pos_[moving] = static_cast<std::uint32_t>(slot);
  return levels;
}

std::uint32_t IndexedMinHeap::sift_down(std::size_t slot) {
  const std::size_t n = heap_.size();
  const ClockId moving = heap_[slot];
  std::uint32_t levels = 0;
  for (;;) {
    std::size_t child = 2 * slot + 1;
    if (child >= n) break;
    if (child + 1 < n && less(heap_[child + 1], heap_[child])) ++child;
    if (!less(heap_[child], moving)) break;
    heap_[slot] = heap_[child];
    pos_[heap_[slot]] = static_cast<std::uint32_t>(slot);
    slot = child;
    ++levels;
  }
  heap_[slot] = moving;
  pos_[moving] = static_cast<std::uint32_t>(slot);
  return levels;
}

std::optional<std::string> IndexedMinHeap::check() const {
  std::ostringstream os;
  for (std::size_t slot = 0; slot < heap_.size(); ++slot) {
    const ClockId id = heap_[slot];
    if (id >= pos_.size() || pos_[id] != slot) {
      os << "position map broken at slot " << slot;
      return os.str();
    }
    if (slot > 0 && less(id, heap_[(slot - 1) / 2])) {
      os << "heap order violated at slot " << slot << " (key " << keys_[id]
         << " < parent key " << keys_[heap_[(slot - 1) / 2]] << ')';
      return os.str();
    }
  }
  return std::nullopt;
}

}  // namespace ssa
