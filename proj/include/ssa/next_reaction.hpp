#pragma once

#include <vector>

#include "ssa/indexed_min_heap.hpp"
#include "ssa/scheduler.hpp"

namespace ssa {

/// Gibson-Bruck next reaction method: absolute firing times in an indexed
/// min-heap, affected clocks re-keyed through the time rescaling identity.
class NextReactionMethod final : public Scheduler {
 public:
  NextReactionMethod(std::unique_ptr<ProcessModel> model, std::uint64_t seed);

  Method method() const override { return Method::kNextReaction; }
  std::optional<std::string> check_invariants() const override;

  const IndexedMinHeap& heap() const { return heap_; }

 protected:
  std::optional<Event> next_event(Time horizon) override;

 private:
  std::vector<double> rates_;
  IndexedMinHeap heap_;
};

}  // namespace ssa
