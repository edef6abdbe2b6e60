#include "ssa/oracle/oracle.hpp"

#include <algorithm>
#include <iomanip>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "ssa/models/constant_rate.hpp"
#include "ssa/oracle/statistics.hpp"

namespace ssa::oracle {

namespace {

double rate_sum(const std::vector<double>& rates) {
  if (rates.empty()) throw std::invalid_argument("need at least one clock");
  for (double r : rates)
    if (!(r >= 0.0)) throw std::invalid_argument("rates must be nonnegative");
  const double total = std::accumulate(rates.begin(), rates.end(), 0.0);
  if (!(total > 0.0)) throw std::invalid_argument("rates sum to zero");
  return total;
}

Event first_event(const EngineFactory& factory, const std::vector<double>& rates,
                  std::uint64_t seed) {
  auto engine = factory(std::make_unique<models::ConstantRateModel>(rates), seed);
  auto ev = engine->step();
  SSA_EXPECTS(ev.has_value(), "engine fired no event with positive total rate");
  return *ev;
}

void finish(StatTestReport& rep) {
  if (!rep.low_power) rep.passed = rep.p_value >= rep.significance;
}

}  // namespace

EngineFactory engine_factory(Method method, EngineOptions options) {
  return [method, options](std::unique_ptr<ProcessModel> model, std::uint64_t seed) {
    return make_scheduler(method, std::move(model), seed, options);
  };
}

EngineOptions constant_rate_options(std::size_t clocks) {
  models::ModelSpec spec;
  spec.kind = models::ModelKind::kConstant;
  spec.constant_rates.assign(clocks, 1.0);
  EngineOptions options;
  options.hlm = models::default_hlm_params(spec);
  return options;
}

StatTestReport first_event_index_test(const EngineFactory& factory,
                                      const std::vector<double>& rates, std::size_t n,
                                      double significance, std::uint64_t seed) {
  const double total = rate_sum(rates);
  StatTestReport rep;
  rep.name = "first-event index";
  rep.significance = significance;
  rep.sample_size = n;
  if (rates.size() == 1) {
    rep.note = "single clock";
    return rep;
  }
  if (n < 10000) throw std::invalid_argument("first_event_index_test needs n >= 10^4");

  std::vector<std::uint64_t> counts(rates.size(), 0);
  for (std::size_t i = 0; i < n; ++i)
    ++counts[first_event(factory, rates, derive_seed(seed, i)).clock];
  std::vector<double> probs(rates.size());
  for (std::size_t i = 0; i < rates.size(); ++i) probs[i] = rates[i] / total;
  const ChiSquareResult chi = chi_square_gof(counts, probs);
  rep.statistic = chi.statistic;
  rep.p_value = chi.p_value;
  std::ostringstream note;
  note << "chi-square, " << chi.bins << " bins";
  rep.note = note.str();
  finish(rep);
  return rep;
}

StatTestReport holding_time_test(const EngineFactory& factory, const std::vector<double>& rates,
                                 std::size_t n, double significance, std::uint64_t seed) {
  const double total = rate_sum(rates);
  if (n < 1000) throw std::invalid_argument("holding_time_test needs n >= 10^3");
  std::vector<double> times(n);
  for (std::size_t i = 0; i < n; ++i)
    times[i] = first_event(factory, rates, derive_seed(seed, i)).time;

  StatTestReport rep;
  rep.name = "first-event time";
  rep.significance = significance;
  rep.sample_size = n;
  const double mean = std::accumulate(times.begin(), times.end(), 0.0) / static_cast<double>(n);
  rep.statistic = ks_distance(times, exponential_cdf(total));
  rep.p_value = ks_p_value(rep.statistic, static_cast<double>(n));
  std::ostringstream note;
  note << "KS vs Exp(" << total << "), mean " << mean << " vs " << 1.0 / total;
  rep.note = note.str();
  finish(rep);
  return rep;
}

std::vector<double> observe_ensemble(const models::ModelSpec& spec, Method method,
                                     const EngineOptions& options, Time t_end,
                                     std::size_t replicas, std::uint64_t seed,
                                     unsigned threads) {
  std::vector<double> out(replicas);
  auto work = [&](std::size_t begin, std::size_t stride) {
    for (std::size_t r = begin; r < replicas; r += stride) {
      auto engine = make_scheduler(method, models::make_model(spec), derive_seed(seed, r), options);
      engine->run_until(t_end);
      out[r] = engine->model().observable();
    }
  };
  if (threads <= 1 || replicas <= 1) {
    work(0, 1);
    return out;
  }
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, replicas));
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t, threads);
  return out;
}

StatTestReport compare_ensembles(std::string name, std::vector<double> a, std::vector<double> b,
                                 double significance) {
  StatTestReport rep;
  rep.name = std::move(name);
  rep.significance = significance;
  rep.sample_size = std::min(a.size(), b.size());
  const double na = static_cast<double>(a.size()), nb = static_cast<double>(b.size());
  rep.statistic = ks_distance(a, b);
  rep.p_value = ks_p_value(rep.statistic, na * nb / (na + nb));
  rep.low_power = a.size() < 1000 || b.size() < 1000;
  rep.note = rep.low_power ? "two-sample KS, low power (< 1000 replicas)" : "two-sample KS";
  finish(rep);
  return rep;
}

StatTestReport cross_engine_test(const models::ModelSpec& spec, Method a, Method b, Time t_end,
                                 std::size_t replicas, double significance, std::uint64_t seed,
                                 unsigned threads) {
  EngineOptions options;
  options.hlm = models::default_hlm_params(spec);
  auto xs = observe_ensemble(spec, a, options, t_end, replicas, derive_seed(seed, 0), threads);
  auto ys = observe_ensemble(spec, b, options, t_end, replicas, derive_seed(seed, 1), threads);
  std::string name = std::string(models::model_kind_name(spec.kind)) + " " +
                     std::string(method_name(a)) + " vs " + std::string(method_name(b));
  return compare_ensembles(std::move(name), std::move(xs), std::move(ys), significance);
}

AuditReport structural_audit(Scheduler& engine, std::uint64_t n_events) {
  AuditReport rep;
  auto check = [&](std::uint64_t index) {
    if (auto err = engine.check_invariants()) {
      rep.passed = false;
      rep.failed_at = index;
      std::ostringstream os;
      os << method_name(engine.method()) << " on " << engine.model().name() << " at t="
         << engine.now() << ": " << *err;
      rep.diagnostics = os.str();
      return false;
    }
    return true;
  };
  if (!check(0)) return rep;
  Time last = engine.now();
  while (rep.events_checked < n_events) {
    auto ev = engine.step();
    if (!ev) break;
    ++rep.events_checked;
    if (ev->time < last) {
      rep.passed = false;
      rep.failed_at = rep.events_checked;
      rep.diagnostics = "event time went backwards";
      return rep;
    }
    last = ev->time;
    if (!check(rep.events_checked)) return rep;
  }
  return rep;
}

void write_report_text(std::ostream& os, const std::vector<StatTestReport>& reports) {
  std::size_t failed = 0;
  for (const auto& r : reports) {
    os << (r.passed ? "PASS " : "FAIL ") << r.name << ": statistic=" << r.statistic
       << " p=" << r.p_value << " n=" << r.sample_size;
    if (!r.note.empty()) os << " (" << r.note << ')';
    os << '\n';
    if (!r.passed) ++failed;
  }
  const double per_test = reports.empty() ? 0.0 : reports.front().significance;
  const double family = std::min(1.0, per_test * static_cast<double>(reports.size()));
  os << failed << " of " << reports.size() << " tests failed; per-test significance " << per_test
     << ", Bonferroni bound on a false alarm anywhere " << family << '\n';
}

void write_report_csv(std::ostream& os, const std::vector<StatTestReport>& reports) {
  os << "name,statistic,p_value,significance,sample_size,passed,low_power,note\n";
  auto quoted = [](const std::string& s) {
    std::string q = "\"";
    for (char c : s) q += (c == '"') ? std::string("\"\"") : std::string(1, c);
    return q + '"';
  };
  for (const auto& r : reports)
    os << quoted(r.name) << ',' << std::setprecision(10) << r.statistic << ',' << r.p_value << ','
       << r.significance << ',' << r.sample_size << ',' << (r.passed ? 1 : 0) << ','
       << (r.low_power ? 1 : 0) << ',' << quoted(r.note) << '\n';
}

}  // namespace ssa::oracle
