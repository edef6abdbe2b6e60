#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ssa/engine_factory.hpp"
#include "ssa/models/model_factory.hpp"

namespace ssa::bench {

/// One benchmark cell: a model, an engine, and how long and how often to run.
struct RunConfig {
  models::ModelSpec model;
  Method method = Method::kHashingLeaping;
  Time t_end = 10.0;
  /// HLM window and buckets; the per-model defaults when unset.
  std::optional<HlmParams> hlm;
  CrmParams crm;
  std::uint64_t seed = 1;
  std::size_t replicas = 1;
  bool counters = true;
  /// Replicas run on this many threads. Timings are only comparable when 1.
  unsigned threads = 1;

  /// Throws std::invalid_argument on a bad combination.
  void validate() const;
  HlmParams hlm_params() const;
  EngineOptions engine_options() const;
};

struct ReplicaResult {
  std::uint64_t seed = 0;
  std::uint64_t events = 0;
  /// Wall-clock seconds spent in the simulation loop only.
  double seconds = 0.0;
  double observable = 0.0;
  OpCounters counters;
};

struct BenchmarkResult {
  RunConfig config;
  std::vector<ReplicaResult> replicas;
  /// Seconds per 10^6 events over replicas that fired at least one event.
  /// Unset when none did.
  std::optional<double> mean_sec_per_million;
  double sd_sec_per_million = 0.0;
  /// sd / sqrt(replicas used).
  double sem_sec_per_million = 0.0;
  OpCounters totals;

  double mean_events() const;
};

/// Builds, then times, each replica. Replica r is seeded with
/// derive_seed(config.seed, r).
BenchmarkResult run_benchmark(const RunConfig& config);

struct SweepCell {
  RunConfig config;
  std::optional<BenchmarkResult> result;
  std::string error;
};

/// Cross product of sizes and methods over a template config. A cell that
/// throws is recorded with its error and the sweep moves on.
std::vector<SweepCell> sweep(const RunConfig& base, const std::vector<std::size_t>& sizes,
                             const std::vector<Method>& methods);

/// Long-format result table. Column order is fixed:
///
///   model, method, size, clocks, t_end, tau, q, groups, seed, replicas,
///   events_mean, sec_per_1e6_mean, sec_per_1e6_sd, sec_per_1e6_sem,
///   comparisons_per_event, moves_per_event, moves_with_relink_per_event,
///   moves_without_relink_per_event, search_and_moves_per_event,
///   heap_swaps_per_event, bucket_iterations_per_event, redistributions,
///   rejections_per_event, status, error
///
/// size is M for KMP and CRN and K for Gray-Scott; clocks is the scale used
/// in plots (6 K^2 for Gray-Scott). Ratio columns are empty when no events
/// fired or counters are off; tau and q are empty for non-HLM methods.
void write_csv_header(std::ostream& os);
void write_csv_row(std::ostream& os, const BenchmarkResult& result);
void write_csv_row(std::ostream& os, const SweepCell& cell);
void write_csv(std::ostream& os, const std::vector<SweepCell>& cells);

struct SnapshotResult {
  /// Simulation time of the emitted grid.
  Time time = 0.0;
  std::uint64_t events = 0;
  /// Set when t_snapshot exceeded t_end and the final state was emitted.
  std::optional<std::string> warning;
};

/// Runs a Gray-Scott model up to t_snapshot (capped at t_end) and writes the
/// K x K grid of U counts as CSV, one grid row per line.
SnapshotResult emit_grid_snapshot(const models::ModelSpec& spec, Method method,
                                  const EngineOptions& options, std::uint64_t seed,
                                  Time t_snapshot, Time t_end, std::ostream& os);

}  // namespace ssa::bench
