// ssa-bench: timed runs, scaling sweeps, statistical validation, cost-model
// calibration and Gray-Scott grid snapshots.
//
// Output goes to --out when given, else to $SSA_BENCH_OUT_DIR/<command>.csv
// when that variable is set, else to stdout.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ssa/bench/bench.hpp"
#include "ssa/bench/calibration.hpp"
#include "ssa/oracle/oracle.hpp"

namespace {

using namespace ssa;

constexpr int kUsageError = 2;

struct Common {
  std::string model = "kmp";
  std::size_t size = 0;
  std::size_t side = 0;
  double t_end = 10.0;
  double tau = 0.0;
  std::size_t q = 0;
  std::size_t groups = 30;
  double group_base = 0.0;
  std::uint64_t seed = 1;
  std::uint64_t structure_seed = 1;
  std::size_t replicas = 1;
  bool counters = false;
  unsigned threads = 1;
  std::string out;
};

void add_common(CLI::App* cmd, Common& c, bool with_size = true) {
  cmd->add_option("--model", c.model, "kmp | crn | gray-scott | oregonator | constant")
      ->capture_default_str();
  if (with_size) {
    cmd->add_option("--M", c.size, "oscillators (kmp) or reactions (crn)");
    cmd->add_option("--K", c.side, "grid side for gray-scott");
  }
  cmd->add_option("--t-end", c.t_end, "simulation horizon")->capture_default_str();
  cmd->add_option("--tau", c.tau, "HLM window length (model default when omitted)");
  cmd->add_option("--q", c.q, "HLM buckets per window (model default when omitted)");
  cmd->add_option("--groups", c.groups, "CRM rate groups")->capture_default_str();
  cmd->add_option("--group-base", c.group_base, "CRM lowest group bound (0 = automatic)");
  cmd->add_option("--seed", c.seed, "base seed")->capture_default_str();
  cmd->add_option("--structure-seed", c.structure_seed, "seed of the random CRN wiring")
      ->capture_default_str();
  cmd->add_option("--replicas", c.replicas, "independent replicas")->capture_default_str();
  cmd->add_flag("--counters", c.counters, "collect operation counters");
  cmd->add_option("--threads", c.threads, "run replicas in parallel (skews timings)")
      ->capture_default_str();
  cmd->add_option("--out", c.out, "output file");
}

models::ModelSpec model_spec(const Common& c) {
  models::ModelSpec spec;
  spec.kind = models::parse_model_kind(c.model);
  spec.structure_seed = c.structure_seed;
  if (spec.kind == models::ModelKind::kGrayScott) {
    if (c.size != 0 && c.side == 0) throw CLI::ValidationError("gray-scott takes --K, not --M");
    spec.size = c.side != 0 ? c.side : 10;
  } else if (c.size != 0) {
    spec.size = c.size;
  }
  return spec;
}

bench::RunConfig run_config(const Common& c, Method method) {
  bench::RunConfig cfg;
  cfg.model = model_spec(c);
  cfg.method = method;
  cfg.t_end = c.t_end;
  if (c.tau > 0.0 || c.q > 0) {
    HlmParams p = models::default_hlm_params(cfg.model);
    if (c.tau > 0.0) p.tau = c.tau;
    if (c.q > 0) p.q = c.q;
    cfg.hlm = p;
  }
  cfg.crm.groups = c.groups;
  cfg.crm.base = c.group_base;
  cfg.seed = c.seed;
  cfg.replicas = c.replicas;
  cfg.counters = c.counters;
  cfg.threads = c.threads;
  return cfg;
}

/// Opens the destination for a command's main output.
class Output {
 public:
  Output(const std::string& explicit_path, const std::string& command) {
    std::string path = explicit_path;
    if (path.empty()) {
      if (const char* dir = std::getenv("SSA_BENCH_OUT_DIR"); dir && *dir) {
        std::filesystem::create_directories(dir);
        path = (std::filesystem::path(dir) / (command + ".csv")).string();
      }
    }
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw std::runtime_error("cannot open " + path);
      path_ = path;
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }
  const std::string& path() const { return path_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::string path_;
};

std::vector<std::size_t> parse_sizes(const std::vector<std::string>& raw, double max_size) {
  std::vector<std::size_t> out;
  for (const auto& s : raw) {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size() || v < 1) throw CLI::ValidationError("bad size '" + s + "'");
    if (v > max_size) throw CLI::ValidationError("size " + s + " exceeds --max-size");
    out.push_back(static_cast<std::size_t>(v));
  }
  return out;
}

void print_summary(const bench::BenchmarkResult& r) {
  std::cerr << models::model_kind_name(r.config.model.kind) << ' ' << method_name(r.config.method)
            << " size=" << r.config.model.size << " events/replica=" << r.mean_events();
  if (r.mean_sec_per_million)
    std::cerr << " sec/1e6 events=" << *r.mean_sec_per_million << " (sd "
              << r.sd_sec_per_million << ")";
  if (r.config.counters && r.totals.events > 0)
    std::cerr << " ops/event=" << per_event(r.totals.search_and_moves(), r.totals.events)
              << " heap swaps/event=" << per_event(r.totals.heap_swaps, r.totals.events);
  std::cerr << '\n';
}

int run_validate(const Common& c, const std::vector<std::string>& methods, std::size_t samples,
                 double significance) {
  std::vector<Method> ms;
  for (const auto& m : methods) ms.push_back(parse_method(m));
  std::vector<oracle::StatTestReport> reports;
  const std::vector<double> rates = {1.0, 2.0, 3.0, 4.0, 5.0};
  const auto opts = oracle::constant_rate_options(rates.size());
  for (Method m : ms) {
    const auto factory = oracle::engine_factory(m, opts);
    auto idx = oracle::first_event_index_test(factory, rates, samples, significance, c.seed);
    idx.name = std::string(method_name(m)) + " " + idx.name;
    reports.push_back(idx);
    auto hold = oracle::holding_time_test(factory, rates, samples, significance, c.seed + 1);
    hold.name = std::string(method_name(m)) + " " + hold.name;
    reports.push_back(hold);
  }
  const models::ModelSpec spec = model_spec(c);
  EngineOptions options;
  options.hlm = models::default_hlm_params(spec);
  std::vector<std::vector<double>> ensembles;
  for (std::size_t i = 0; i < ms.size(); ++i)
    ensembles.push_back(oracle::observe_ensemble(spec, ms[i], options, c.t_end, c.replicas,
                                                 derive_seed(c.seed, 100 + i), c.threads));
  for (std::size_t i = 0; i < ms.size(); ++i)
    for (std::size_t j = i + 1; j < ms.size(); ++j)
      reports.push_back(oracle::compare_ensembles(
          std::string(models::model_kind_name(spec.kind)) + " " + std::string(method_name(ms[i])) +
              " vs " + std::string(method_name(ms[j])),
          ensembles[i], ensembles[j], significance));

  oracle::write_report_text(std::cout, reports);
  if (!c.out.empty() || std::getenv("SSA_BENCH_OUT_DIR")) {
    Output out(c.out, "validate");
    oracle::write_report_csv(out.stream(), reports);
  }
  for (const auto& r : reports)
    if (!r.passed) return 1;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact stochastic simulation benchmarks"};
  app.require_subcommand(1);

  Common run_opts;
  std::string run_method = "hlm";
  auto* run = app.add_subcommand("run", "time one model/engine cell");
  add_common(run, run_opts);
  run->add_option("--method", run_method, "dm | frm | nrm | crm | hlm")->capture_default_str();

  Common sweep_opts;
  std::vector<std::string> sweep_methods = {"dm", "nrm", "crm", "hlm"};
  std::vector<std::string> sweep_sizes = {"100", "1000", "10000", "100000"};
  auto* sweep = app.add_subcommand("sweep", "scaling table over sizes and methods");
  add_common(sweep, sweep_opts, false);
  sweep->add_option("--method", sweep_methods, "engines to compare")->delimiter(',')->capture_default_str();
  double max_size = 1e6;
  sweep->add_option("--sizes", sweep_sizes, "M values (K for gray-scott)")->delimiter(',')->capture_default_str();
  sweep->add_option("--max-size", max_size, "refuse sizes above this")->capture_default_str();

  Common val_opts;
  val_opts.model = "oregonator";
  val_opts.replicas = 1000;
  std::vector<std::string> val_methods = {"dm", "frm", "nrm", "crm", "hlm"};
  std::size_t val_samples = 100000;
  double significance = 1e-3;
  auto* validate = app.add_subcommand("validate", "analytic and cross-engine exactness tests");
  add_common(validate, val_opts);
  validate->add_option("--method", val_methods, "engines to test")->delimiter(',')->capture_default_str();
  validate->add_option("--samples", val_samples, "first-event samples per engine")
      ->capture_default_str();
  validate->add_option("--significance", significance, "per-test level")->capture_default_str();

  Common cal_opts;
  cal_opts.size = 10000;
  bench::CalibrationOptions cal;
  auto* calibrate = app.add_subcommand("calibrate", "measure HLM cost constants, suggest Q");
  add_common(calibrate, cal_opts);
  calibrate->add_option("--repetitions", cal.repetitions, "median over this many runs")
      ->capture_default_str();

  Common snap_opts;
  snap_opts.model = "gray-scott";
  snap_opts.side = 100;
  double t_snapshot = 0.0;
  std::string snap_method = "hlm";
  auto* snapshot = app.add_subcommand("snapshot", "K x K grid of U counts for contour plots");
  add_common(snapshot, snap_opts);
  snapshot->add_option("--t", t_snapshot, "snapshot time")->required();
  snapshot->add_option("--method", snap_method, "engine")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    if (*run) {
      const auto result = bench::run_benchmark(run_config(run_opts, parse_method(run_method)));
      Output out(run_opts.out, "run");
      bench::write_csv_header(out.stream());
      bench::write_csv_row(out.stream(), result);
      print_summary(result);
      return 0;
    }
    if (*sweep) {
      std::vector<Method> methods;
      for (const auto& m : sweep_methods) methods.push_back(parse_method(m));
      const auto cells = bench::sweep(run_config(sweep_opts, Method::kHashingLeaping),
                                      parse_sizes(sweep_sizes, max_size), methods);
      Output out(sweep_opts.out, "sweep");
      bench::write_csv(out.stream(), cells);
      for (const auto& cell : cells) {
        if (cell.result)
          print_summary(*cell.result);
        else
          std::cerr << "cell failed: " << cell.error << '\n';
      }
      return 0;
    }
    if (*validate) return run_validate(val_opts, val_methods, val_samples, significance);
    if (*calibrate) {
      const auto cfg = run_config(cal_opts, Method::kHashingLeaping);
      const HlmParams params = cfg.hlm_params();
      const auto constants = bench::calibrate(cfg.model, params, cal);
      const std::size_t clocks = models::make_model(cfg.model)->clock_count();
      const auto s = bench::suggest_parameters(constants, clocks, params.tau);
      Output out(cal_opts.out, "calibrate");
      out.stream() << "model,clocks,tau,c_s,c_i,c_r,c_u_prime,c_u_double_prime,alpha,q_opt,"
                      "predicted_sec_per_event\n"
                   << models::model_kind_name(cfg.model.kind) << ',' << clocks << ','
                   << params.tau << ',' << constants.c_s << ',' << constants.c_i << ','
                   << constants.c_r << ',' << constants.c_u_prime << ','
                   << constants.c_u_double_prime << ',' << constants.alpha << ',' << s.q_opt
                   << ',' << s.predicted_cost << '\n';
      return 0;
    }
    if (*snapshot) {
      const auto cfg = run_config(snap_opts, parse_method(snap_method));
      Output out(snap_opts.out, "snapshot");
      const auto res = bench::emit_grid_snapshot(cfg.model, cfg.method, cfg.engine_options(),
                                                 cfg.seed, t_snapshot, cfg.t_end, out.stream());
      if (res.warning) std::cerr << "warning: " << *res.warning << '\n';
      std::cerr << "grid at t=" << res.time << " after " << res.events << " events\n";
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
