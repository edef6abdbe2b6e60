#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ssa/engine_factory.hpp"
#include "ssa/models/model_factory.hpp"
#include "ssa/scheduler.hpp"

namespace ssa::oracle {

/// Outcome of one statistical check.
struct StatTestReport {
  std::string name;
  /// Chi-square statistic or KS distance.
  double statistic = 0.0;
  double p_value = 1.0;
  double significance = 1e-3;
  std::size_t sample_size = 0;
  /// p_value >= significance, or the test was vacuous.
  bool passed = true;
  /// Too few samples for a meaningful test; `passed` is then not a verdict.
  bool low_power = false;
  std::string note;
};

/// Builds a scheduler around a model.
using EngineFactory =
    std::function<std::unique_ptr<Scheduler>(std::unique_ptr<ProcessModel>, std::uint64_t seed)>;

EngineFactory engine_factory(Method method, EngineOptions options = {});

/// Options for a constant-rate model with `clocks` clocks, matching the
/// per-model HLM defaults.
EngineOptions constant_rate_options(std::size_t clocks);

/// Chi-square test of the index of the first event against R_i / R_sum.
/// Each sample builds a fresh engine on a ConstantRateModel with seed
/// derive_seed(seed, i). Requires n >= 10^4; one clock passes trivially.
StatTestReport first_event_index_test(const EngineFactory& factory,
                                      const std::vector<double>& rates, std::size_t n,
                                      double significance, std::uint64_t seed);

/// KS test of the first event time against Exp(R_sum). Requires n >= 10^3.
StatTestReport holding_time_test(const EngineFactory& factory, const std::vector<double>& rates,
                                 std::size_t n, double significance, std::uint64_t seed);

/// Runs `replicas` independent copies of `spec` under `method` to t_end and
/// returns each final observable. Replica r uses seed derive_seed(seed, r);
/// the result does not depend on `threads`.
std::vector<double> observe_ensemble(const models::ModelSpec& spec, Method method,
                                     const EngineOptions& options, Time t_end,
                                     std::size_t replicas, std::uint64_t seed,
                                     unsigned threads = 1);

/// Two-sample KS comparison of two ensembles. Fewer than 10^3 samples on
/// either side flags low power and does not fail.
StatTestReport compare_ensembles(std::string name, std::vector<double> a, std::vector<double> b,
                                 double significance);

/// Ensembles of engines a and b on the same model with disjoint seeds,
/// compared by two-sample KS on the model observable at t_end. Default
/// per-model HLM parameters are used.
StatTestReport cross_engine_test(const models::ModelSpec& spec, Method a, Method b, Time t_end,
                                 std::size_t replicas, double significance, std::uint64_t seed,
                                 unsigned threads = 1);

struct AuditReport {
  bool passed = true;
  std::uint64_t events_checked = 0;
  /// Index of the event after which the first violation was seen; 0 means
  /// the initial state.
  std::optional<std::uint64_t> failed_at;
  std::string diagnostics;
};

/// Steps `engine` up to n_events times, verifying every structure before
/// the first event and after each one. Stops early if the process dies.
AuditReport structural_audit(Scheduler& engine, std::uint64_t n_events);

/// Report writers used by the validate subcommand.
void write_report_text(std::ostream& os, const std::vector<StatTestReport>& reports);
void write_report_csv(std::ostream& os, const std::vector<StatTestReport>& reports);

}  // namespace ssa::oracle
