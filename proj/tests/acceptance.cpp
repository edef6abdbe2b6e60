// Acceptance suite: one PASS/FAIL line per criterion A1..A10.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ssa/bench/bench.hpp"
#include "ssa/engine_factory.hpp"
#include "ssa/models/gray_scott.hpp"
#include "ssa/models/kmp.hpp"
#include "ssa/models/model_factory.hpp"
#include "ssa/oracle/oracle.hpp"
#include "ssa/oracle/statistics.hpp"
#include "ssa/time_rescale.hpp"

using namespace ssa;

namespace {

constexpr double kSignificance = 1e-3;
constexpr std::uint64_t kSeed = 20240601;

struct Verdict {
  bool passed = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      passed = false;
      detail << "[violated: " << what << "] ";
    }
  }
};

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

models::ModelSpec kmp_spec(std::size_t m) {
  models::ModelSpec s;
  s.kind = models::ModelKind::kKmp;
  s.size = m;
  return s;
}

EngineOptions default_options(const models::ModelSpec& spec) {
  EngineOptions o;
  o.hlm = models::default_hlm_params(spec);
  return o;
}

bench::BenchmarkResult measure(const models::ModelSpec& spec, Method method, HlmParams hlm,
                               Time t_end, bool counters, std::size_t replicas = 1) {
  bench::RunConfig c;
  c.model = spec;
  c.method = method;
  c.hlm = hlm;
  c.t_end = t_end;
  c.counters = counters;
  c.replicas = replicas;
  c.seed = derive_seed(kSeed, spec.size);
  return bench::run_benchmark(c);
}

double ops_per_event(const bench::BenchmarkResult& r) {
  return per_event(r.totals.search_and_moves(), r.totals.events);
}

// Index chi-square and holding-time KS for one factory on rates (1..5).
void analytic_checks(Verdict& v, const std::string& label, const oracle::EngineFactory& factory,
                     std::uint64_t seed) {
  const std::vector<double> rates = {1, 2, 3, 4, 5};
  const std::size_t n = 100000;
  const auto index = oracle::first_event_index_test(factory, rates, n, kSignificance, seed);
  const auto hold = oracle::holding_time_test(factory, rates, n, kSignificance, seed + 1);
  v.detail << label << ": chi2 p=" << index.p_value << " KS p=" << hold.p_value << "; ";
  v.require(index.passed, label + " index law");
  v.require(hold.passed, label + " holding time");
}

Verdict a1() {
  Verdict v;
  for (Method m : all_methods()) {
    const std::string name(method_name(m));
    Stopwatch sw;
    analytic_checks(v, name, oracle::engine_factory(m, oracle::constant_rate_options(5)),
                    derive_seed(kSeed, static_cast<std::uint64_t>(m)));
    const double s = sw.seconds();
    v.detail << name << " took " << s << " s; ";
    v.require(s < 10.0, name + " runtime < 10 s");
  }
  return v;
}

Verdict a2() {
  Verdict v;
  v.require(rescale_time(5.0, 2.0, 1.0, 3.0) == 3.0, "(5,2,1,3) -> 3");
  v.require(rescale_time(7.5, 2.0, 4.0, 4.0) == 7.5, "identity");
  v.require(rescale_time(5.0, 2.0, 1.0, 0.0) == kNever, "zero target -> never");
  RngStream rng(derive_seed(kSeed, 2));
  const double t_fire = 3.0, r_old = 1.7, r_new = 4.2;
  std::vector<double> overshoot(1'000'000);
  for (auto& x : overshoot)
    x = rescale_time(t_fire + rng.exponential(r_old), t_fire, r_old, r_new) - t_fire;
  const double d = oracle::ks_distance(overshoot, oracle::exponential_cdf(r_new));
  v.detail << "KS distance " << d << " over 1e6 samples";
  v.require(d < 0.005, "KS distance < 0.005");
  return v;
}

// Ensembles per engine, compared over every unordered pair.
void pairwise_equivalence(Verdict& v, const std::string& label, const models::ModelSpec& spec,
                          const std::vector<std::pair<std::string, EngineOptions>>& variants,
                          const std::vector<Method>& methods, Time t_end, std::size_t replicas) {
  std::vector<std::pair<std::string, std::vector<double>>> ensembles;
  for (std::size_t i = 0; i < methods.size(); ++i) {
    ensembles.emplace_back(
        variants[i].first,
        oracle::observe_ensemble(spec, methods[i], variants[i].second, t_end, replicas,
                                 derive_seed(kSeed + 3, ensembles.size() + 100 * spec.size)));
  }
  std::size_t passed = 0, total = 0;
  double min_p = 1.0;
  for (std::size_t i = 0; i < ensembles.size(); ++i)
    for (std::size_t j = i + 1; j < ensembles.size(); ++j) {
      const auto r = oracle::compare_ensembles(ensembles[i].first + " vs " + ensembles[j].first,
                                               ensembles[i].second, ensembles[j].second,
                                               kSignificance);
      ++total;
      passed += r.passed && !r.low_power;
      min_p = std::min(min_p, r.p_value);
      v.require(r.passed && !r.low_power, label + " " + r.name);
    }
  v.detail << label << ": " << passed << "/" << total << " pairs agree (min p=" << min_p << "); ";
}

Verdict a3() {
  Verdict v;
  Stopwatch sw;
  const auto methods = all_methods();
  auto variants_for = [&](const models::ModelSpec& spec) {
    std::vector<std::pair<std::string, EngineOptions>> out;
    for (Method m : methods) out.emplace_back(std::string(method_name(m)), default_options(spec));
    return out;
  };
  const auto kmp = kmp_spec(10);
  pairwise_equivalence(v, "kmp M=10", kmp, variants_for(kmp), methods, 10.0, 1000);
  models::ModelSpec oreg;
  oreg.kind = models::ModelKind::kOregonator;
  pairwise_equivalence(v, "oregonator", oreg, variants_for(oreg), methods, 10.0, 1000);
  const double s = sw.seconds();
  v.detail << "runtime " << s << " s";
  v.require(s < 300.0, "runtime < 300 s");
  return v;
}

Verdict a4() {
  Verdict v;
  std::vector<double> ops;
  for (std::size_t m : {100u, 1000u, 10000u, 100000u}) {
    const auto r = measure(kmp_spec(m), Method::kHashingLeaping, {0.2, m / 10},
                           5e5 / (1.7 * static_cast<double>(m)), true);
    ops.push_back(ops_per_event(r));
    v.detail << "M=" << m << ": " << ops.back() << " ops/event; ";
    v.require(ops.back() >= 2.5 && ops.back() <= 7.5, "ops/event in [2.5, 7.5] at M=" +
                                                          std::to_string(m));
  }
  const auto [lo, hi] = std::minmax_element(ops.begin(), ops.end());
  v.detail << "max/min " << *hi / *lo;
  v.require(*hi / *lo < 2.0, "max/min < 2");
  return v;
}

Verdict a5() {
  Verdict v;
  auto run = [](Method method, std::size_t m) {
    return measure(kmp_spec(m), method, {0.2, m / 10}, 5e5 / (1.7 * static_cast<double>(m)),
                   true);
  };
  const auto nrm_small = run(Method::kNextReaction, 100);
  const auto nrm_large = run(Method::kNextReaction, 100000);
  const auto hlm_small = run(Method::kHashingLeaping, 100);
  const auto hlm_large = run(Method::kHashingLeaping, 100000);
  const double swaps_small = per_event(nrm_small.totals.heap_swaps, nrm_small.totals.events);
  const double swaps_large = per_event(nrm_large.totals.heap_swaps, nrm_large.totals.events);
  const double nrm_growth = swaps_large / swaps_small;
  const double hlm_growth = ops_per_event(hlm_large) / ops_per_event(hlm_small);
  v.detail << "NRM swaps/event " << swaps_small << " -> " << swaps_large << " (x" << nrm_growth
           << "); HLM ops/event " << ops_per_event(hlm_small) << " -> "
           << ops_per_event(hlm_large) << " (x" << hlm_growth << ")";
  v.require(nrm_growth >= 1.5, "NRM swap growth >= 1.5");
  v.require(hlm_growth < 1.3, "HLM op growth < 1.3");
  return v;
}

Verdict a6() {
  Verdict v;
  models::ModelSpec crn;
  crn.kind = models::ModelKind::kRandomCrn;
  crn.size = 10000;
  const double crn_ops =
      ops_per_event(measure(crn, Method::kHashingLeaping, {0.1, 500}, 50.0, true));
  models::ModelSpec gs;
  gs.kind = models::ModelKind::kGrayScott;
  gs.size = 30;
  const double gs_ops =
      ops_per_event(measure(gs, Method::kHashingLeaping, {0.5, 2700}, 100.0, true));
  v.detail << "CRN M=1e4: " << crn_ops << " ops/event; Gray-Scott K=30: " << gs_ops
           << " ops/event";
  v.require(crn_ops >= 14.0 && crn_ops <= 41.0, "CRN in [14, 41]");
  v.require(gs_ops >= 5.0 && gs_ops <= 16.0, "Gray-Scott in [5, 16]");
  return v;
}

Verdict a7() {
  Verdict v;
  auto worst = oracle::constant_rate_options(5);
  worst.hlm.q = 1;
  analytic_checks(v, "hlm Q=1", oracle::engine_factory(Method::kHashingLeaping, worst),
                  derive_seed(kSeed, 7));
  const auto spec = kmp_spec(100);
  EngineOptions q1;
  q1.hlm = {0.2, 1};
  pairwise_equivalence(v, "kmp M=100", spec,
                       {{"hlm Q=1", q1}, {"nrm", default_options(spec)},
                        {"dm", default_options(spec)}},
                       {Method::kHashingLeaping, Method::kNextReaction, Method::kDirect}, 10.0,
                       1000);
  return v;
}

Verdict a8() {
  Verdict v;
  std::vector<models::ModelSpec> specs(4);
  specs[0] = kmp_spec(100);
  specs[1].kind = models::ModelKind::kRandomCrn;
  specs[1].size = 1000;
  specs[2].kind = models::ModelKind::kGrayScott;
  specs[2].size = 10;
  specs[3].kind = models::ModelKind::kOregonator;
  std::size_t runs = 0;
  for (Method m : {Method::kNextReaction, Method::kCompositionRejection, Method::kHashingLeaping})
    for (const auto& spec : specs) {
      auto engine = make_scheduler(m, models::make_model(spec), derive_seed(kSeed, 8 + runs),
                                   default_options(spec));
      const auto report = oracle::structural_audit(*engine, 10000);
      ++runs;
      const std::string label = std::string(method_name(m)) + "/" +
                                std::string(models::model_kind_name(spec.kind));
      v.require(report.passed, label + ": " + report.diagnostics);
      v.require(report.events_checked == 10000, label + " ran 1e4 events");
    }
  v.detail << runs << " audited runs of 1e4 events";
  return v;
}

Verdict a9() {
  Verdict v;
  Stopwatch sw;
  std::vector<double> hlm, dm;
  for (std::size_t m : {1000u, 10000u, 100000u, 1000000u}) {
    const auto spec = kmp_spec(m);
    const double rate = 1.7 * static_cast<double>(m);
    const auto h = measure(spec, Method::kHashingLeaping, models::default_hlm_params(spec),
                           2e6 / rate, false, 3);
    // DM costs O(M) per event, so it gets fewer events at larger M.
    const auto d = measure(spec, Method::kDirect, models::default_hlm_params(spec),
                           std::max(2e9 / static_cast<double>(m), 2000.0) / rate, false, 3);
    hlm.push_back(*h.mean_sec_per_million);
    dm.push_back(*d.mean_sec_per_million);
    v.detail << "M=" << m << ": hlm " << hlm.back() << ", dm " << dm.back() << " s/1e6; ";
  }
  const auto [lo, hi] = std::minmax_element(hlm.begin(), hlm.end());
  const double hlm_spread = *hi / *lo;
  const double dm_growth = dm.back() / dm.front();
  v.detail << "hlm max/min " << hlm_spread << ", dm growth x" << dm_growth << ", runtime "
           << sw.seconds() << " s";
  v.require(hlm_spread < 2.0, "HLM max/min < 2");
  v.require(dm_growth > 10.0, "DM growth > 10");
  v.require(sw.seconds() < 1800.0, "runtime < 30 min");
  return v;
}

Verdict a10() {
  Verdict v;
  {
    const std::size_t m = 100;
    auto engine = make_scheduler(Method::kHashingLeaping, models::make_model(kmp_spec(m)),
                                 derive_seed(kSeed, 10), default_options(kmp_spec(m)));
    const auto& chain = static_cast<const models::KmpChain&>(engine->model());
    std::vector<double> shadow = chain.energies();
    std::uint64_t interior = 0, violations = 0;
    while (interior < 1'000'000) {
      const auto ev = engine->step();
      if (!ev) break;
      const auto& e = chain.energies();
      const ClockId c = ev->clock;
      if (c > 0 && c < m) {
        ++interior;
        if (e[c - 1] + e[c] != shadow[c - 1] + shadow[c]) ++violations;
        shadow[c - 1] = e[c - 1];
        shadow[c] = e[c];
      } else {
        const std::size_t k = c == 0 ? 0 : m - 1;
        shadow[k] = e[k];
      }
      if (shadow != e) ++violations;
      for (double x : e) violations += x < 0.0;
    }
    v.detail << interior << " interior KMP events, " << violations << " violations; ";
    v.require(interior == 1'000'000 && violations == 0, "KMP pair sums exact");
  }
  {
    models::ModelSpec gs;
    gs.kind = models::ModelKind::kGrayScott;
    gs.size = 10;
    auto engine = make_scheduler(Method::kHashingLeaping, models::make_model(gs),
                                 derive_seed(kSeed, 11), default_options(gs));
    const auto& grid = static_cast<const models::GrayScottGrid&>(engine->model());
    std::uint64_t events = 0, negative = 0;
    while (events < 1'000'000 && engine->step()) {
      ++events;
      negative += !grid.counts_nonnegative();
    }
    v.detail << events << " Gray-Scott events, " << negative << " with negative counts";
    v.require(events == 1'000'000 && negative == 0, "Gray-Scott counts nonnegative");
  }
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"A1", a1}, {"A2", a2}, {"A3", a3}, {"A4", a4}, {"A5", a5},
      {"A6", a6}, {"A7", a7}, {"A8", a8}, {"A9", a9}, {"A10", a10},
  };
  CLI::App app{"Acceptance criteria A1..A10"};
  std::vector<std::string> only;
  app.add_option("--only", only, "Run only these criteria (e.g. A1 A4)");
  CLI11_PARSE(app, argc, argv);

  const std::set<std::string> selected(only.begin(), only.end());
  int failures = 0;
  for (const auto& [id, run] : criteria) {
    if (!selected.empty() && !selected.count(id)) continue;
    Stopwatch sw;
    Verdict v;
    try {
      v = run();
    } catch (const std::exception& e) {
      v.passed = false;
      v.detail << "exception: " << e.what();
    }
    failures += !v.passed;
    std::printf("%s %s (%.1f s) %s\n", id.c_str(), v.passed ? "PASS" : "FAIL", sw.seconds(),
                v.detail.str().c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
