#include "ssa/bench/bench.hpp"

#include <chrono>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "ssa/models/gray_scott.hpp"

namespace ssa::bench {

namespace {

ReplicaResult run_replica(const RunConfig& config, std::size_t index) {
  ReplicaResult rep;
  rep.seed = derive_seed(config.seed, index);
  auto engine = make_scheduler(config.method, models::make_model(config.model), rep.seed,
                               config.engine_options());
  const auto start = std::chrono::steady_clock::now();
  rep.events = engine->run_until(config.t_end);
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  rep.observable = engine->model().observable();
  if (config.counters) rep.counters = engine->counters();
  rep.counters.events = rep.events;
  return rep;
}

void write_ratio(std::ostream& os, bool enabled, std::uint64_t count, std::uint64_t events) {
  if (enabled && events > 0) os << per_event(count, events);
  os << ',';
}

void write_config_columns(std::ostream& os, const RunConfig& c) {
  os << models::model_kind_name(c.model.kind) << ',' << method_name(c.method) << ','
     << c.model.size << ',' << models::scale_of(c.model) << ',' << c.t_end << ',';
  if (c.method == Method::kHashingLeaping) {
    const HlmParams p = c.hlm_params();
    os << p.tau << ',' << p.q << ',';
  } else {
    os << ",,";
  }
  if (c.method == Method::kCompositionRejection) os << c.crm.groups;
  os << ',' << c.seed << ',' << c.replicas << ',';
}

}  // namespace

void RunConfig::validate() const {
  if (!(t_end >= 0.0) || !std::isfinite(t_end))
    throw std::invalid_argument("t_end must be finite and nonnegative");
  if (replicas < 1) throw std::invalid_argument("replicas must be at least 1");
  if (model.size < 1) throw std::invalid_argument("model size must be positive");
  if (hlm) hlm->validate();
  if (crm.groups < 1) throw std::invalid_argument("CRM needs at least one group");
}

HlmParams RunConfig::hlm_params() const {
  return hlm ? *hlm : models::default_hlm_params(model);
}

EngineOptions RunConfig::engine_options() const {
  EngineOptions options;
  options.hlm = hlm_params();
  options.crm = crm;
  return options;
}

double BenchmarkResult::mean_events() const {
  if (replicas.empty()) return 0.0;
  return static_cast<double>(totals.events) / static_cast<double>(replicas.size());
}

BenchmarkResult run_benchmark(const RunConfig& config) {
  config.validate();
  BenchmarkResult result;
  result.config = config;
  result.replicas.resize(config.replicas);
  if (config.threads <= 1 || config.replicas == 1) {
    for (std::size_t r = 0; r < config.replicas; ++r) result.replicas[r] = run_replica(config, r);
  } else {
    const std::size_t stride = std::min<std::size_t>(config.threads, config.replicas);
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < stride; ++t)
      pool.emplace_back([&, t] {
        for (std::size_t r = t; r < config.replicas; r += stride)
          result.replicas[r] = run_replica(config, r);
      });
  }

  std::vector<double> rates;
  for (const auto& rep : result.replicas) {
    result.totals += rep.counters;
    if (rep.events > 0) rates.push_back(rep.seconds / static_cast<double>(rep.events) * 1e6);
  }
  if (!rates.empty()) {
    double mean = 0.0;
    for (double x : rates) mean += x;
    mean /= static_cast<double>(rates.size());
    double ss = 0.0;
    for (double x : rates) ss += (x - mean) * (x - mean);
    const double sd = rates.size() > 1 ? std::sqrt(ss / static_cast<double>(rates.size() - 1)) : 0.0;
    result.mean_sec_per_million = mean;
    result.sd_sec_per_million = sd;
    result.sem_sec_per_million = sd / std::sqrt(static_cast<double>(rates.size()));
  }
  return result;
}

std::vector<SweepCell> sweep(const RunConfig& base, const std::vector<std::size_t>& sizes,
                             const std::vector<Method>& methods) {
  std::vector<SweepCell> cells;
  for (std::size_t size : sizes) {
    for (Method m : methods) {
      SweepCell cell;
      cell.config = base;
      cell.config.model.size = size;
      cell.config.method = m;
      // Per-size defaults unless the caller pinned the HLM parameters.
      try {
        cell.result = run_benchmark(cell.config);
      } catch (const std::exception& e) {
        cell.error = e.what();
      }
      cells.push_back(std::move(cell));
    }
  }
  return cells;
}

void write_csv_header(std::ostream& os) {
  os << "model,method,size,clocks,t_end,tau,q,groups,seed,replicas,events_mean,"
        "sec_per_1e6_mean,sec_per_1e6_sd,sec_per_1e6_sem,comparisons_per_event,"
        "moves_per_event,moves_with_relink_per_event,moves_without_relink_per_event,"
        "search_and_moves_per_event,heap_swaps_per_event,bucket_iterations_per_event,"
        "redistributions,rejections_per_event,status,error\n";
}

void write_csv_row(std::ostream& os, const BenchmarkResult& r) {
  const auto old_precision = os.precision(10);
  write_config_columns(os, r.config);
  os << r.mean_events() << ',';
  if (r.mean_sec_per_million)
    os << *r.mean_sec_per_million << ',' << r.sd_sec_per_million << ',' << r.sem_sec_per_million
       << ',';
  else
    os << ",,,";
  const OpCounters& c = r.totals;
  const bool on = r.config.counters;
  write_ratio(os, on, c.comparisons, c.events);
  write_ratio(os, on, c.moves(), c.events);
  write_ratio(os, on, c.moves_with_relink, c.events);
  write_ratio(os, on, c.moves_without_relink, c.events);
  write_ratio(os, on, c.search_and_moves(), c.events);
  write_ratio(os, on, c.heap_swaps, c.events);
  write_ratio(os, on, c.bucket_iterations, c.events);
  if (on) os << c.redistributions;
  os << ',';
  write_ratio(os, on, c.rejections, c.events);
  os << "ok,\n";
  os.precision(old_precision);
}

void write_csv_row(std::ostream& os, const SweepCell& cell) {
  if (cell.result) {
    write_csv_row(os, *cell.result);
    return;
  }
  write_config_columns(os, cell.config);
  std::string msg = cell.error;
  for (char& ch : msg)
    if (ch == '"' || ch == '\n' || ch == ',') ch = ' ';
  os << ",,,,,,,,,,,,,error,\"" << msg << "\"\n";
}

void write_csv(std::ostream& os, const std::vector<SweepCell>& cells) {
  write_csv_header(os);
  for (const auto& cell : cells) write_csv_row(os, cell);
}

SnapshotResult emit_grid_snapshot(const models::ModelSpec& spec, Method method,
                                  const EngineOptions& options, std::uint64_t seed,
                                  Time t_snapshot, Time t_end, std::ostream& os) {
  if (spec.kind != models::ModelKind::kGrayScott)
    throw std::invalid_argument("grid snapshots need the gray-scott model");
  if (!(t_snapshot >= 0.0)) throw std::invalid_argument("snapshot time must be nonnegative");
  SnapshotResult res;
  Time target = t_snapshot;
  if (t_snapshot > t_end) {
    target = t_end;
    std::ostringstream w;
    w << "snapshot time " << t_snapshot << " is past t_end " << t_end
      << "; emitting the state at t_end";
    res.warning = w.str();
  }
  auto engine = make_scheduler(method, models::make_model(spec), seed, options);
  res.events = engine->run_until(target);
  res.time = target;
  const auto& grid = static_cast<const models::GrayScottGrid&>(engine->model());
  for (std::size_t r = 0; r < grid.side(); ++r) {
    for (std::size_t c = 0; c < grid.side(); ++c) {
      if (c > 0) os << ',';
      os << grid.u(r, c);
    }
    os << '\n';
  }
  return res;
}

}  // namespace ssa::bench
