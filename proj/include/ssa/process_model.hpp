#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string_view>

#include "ssa/dependency_graph.hpp"
#include "ssa/rng.hpp"
#include "ssa/types.hpp"

namespace ssa {

/// A Markov jump process driven by M exponential clocks with
/// state-dependent, time-independent rates. The model owns its state X_t;
/// schedulers read rates and ask the model to apply transformations.
class ProcessModel {
 public:
  virtual ~ProcessModel() = default;

  virtual std::string_view name() const = 0;

  /// Number of clocks M. Fixed for the life of the instance.
  virtual std::size_t clock_count() const = 0;

  /// Dimension N of the state vector.
  virtual std::size_t state_dim() const = 0;

  /// R_clock(X_t) >= 0 for the current state. Pure.
  virtual double rate(ClockId clock) const = 0;

  /// Applies T_clock with a fresh random parameter drawn from `rng` and
  /// returns the clocks whose rates must be re-read (always includes
  /// `clock`). The span stays valid until the next call.
  virtual std::span<const ClockId> apply_event(ClockId clock, RngStream& rng) = 0;

  /// Static superset of every list apply_event can return for `clock`.
  virtual const DependencyGraph& dependencies() const = 0;

  /// Scalar summary of the state used by cross-engine comparisons.
  virtual double observable() const = 0;

  virtual std::unique_ptr<ProcessModel> clone() const = 0;
};

}  // namespace ssa
