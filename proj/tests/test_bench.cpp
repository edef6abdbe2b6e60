#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "ssa/bench/bench.hpp"
#include "ssa/bench/calibration.hpp"

using namespace ssa;
using namespace ssa::bench;

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out(1);
  bool quoted = false;
  for (char c : line) {
    if (c == '"') {
      quoted = !quoted;
    } else if (c == ',' && !quoted) {
      out.emplace_back();
    } else {
      out.back() += c;
    }
  }
  return out;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

RunConfig kmp_config(std::size_t m, Method method) {
  RunConfig c;
  c.model.kind = models::ModelKind::kKmp;
  c.model.size = m;
  c.method = method;
  c.t_end = 1.0;
  return c;
}

}  // namespace

TEST_CASE("CSV header has the documented columns") {
  std::ostringstream os;
  write_csv_header(os);
  CHECK(os.str() ==
        "model,method,size,clocks,t_end,tau,q,groups,seed,replicas,events_mean,"
        "sec_per_1e6_mean,sec_per_1e6_sd,sec_per_1e6_sem,comparisons_per_event,"
        "moves_per_event,moves_with_relink_per_event,moves_without_relink_per_event,"
        "search_and_moves_per_event,heap_swaps_per_event,bucket_iterations_per_event,"
        "redistributions,rejections_per_event,status,error\n");
}

TEST_CASE("an empty run reports zero events and no ratios") {
  auto c = kmp_config(100, Method::kHashingLeaping);
  c.t_end = 0.0;
  c.replicas = 2;
  const auto r = run_benchmark(c);
  CHECK(r.mean_events() == 0.0);
  CHECK_FALSE(r.mean_sec_per_million.has_value());
  std::ostringstream os;
  write_csv_row(os, r);
  const auto cols = split_csv_line(lines_of(os.str()).at(0));
  REQUIRE(cols.size() == 25);
  CHECK(cols[10] == "0");
  for (std::size_t i = 11; i <= 22; ++i) {
    CAPTURE(i);
    if (i != 21) CHECK(cols[i].empty());
  }
  CHECK(cols[23] == "ok");
}

TEST_CASE("HLM rows carry tau and Q, CRM rows carry the group count") {
  auto c = kmp_config(1000, Method::kHashingLeaping);
  std::ostringstream hlm;
  write_csv_row(hlm, run_benchmark(c));
  auto cols = split_csv_line(lines_of(hlm.str()).at(0));
  CHECK(cols[0] == "kmp");
  CHECK(cols[1] == "hlm");
  CHECK(cols[2] == "1000");
  CHECK(cols[3] == "1000");
  CHECK(std::stod(cols[5]) == 0.2);
  CHECK(cols[6] == "100");
  CHECK(cols[7].empty());

  c.method = Method::kCompositionRejection;
  std::ostringstream crm;
  write_csv_row(crm, run_benchmark(c));
  cols = split_csv_line(lines_of(crm.str()).at(0));
  CHECK(cols[5].empty());
  CHECK(cols[6].empty());
  CHECK(cols[7] == "30");
  CHECK_FALSE(cols[22].empty());
}

TEST_CASE("NRM runs report heap swaps") {
  const auto r = run_benchmark(kmp_config(1000, Method::kNextReaction));
  CHECK(r.totals.heap_swaps > 0);
  CHECK(r.mean_sec_per_million.has_value());
}

TEST_CASE("identical configs give identical counts and counters") {
  for (Method m : all_methods()) {
    CAPTURE(method_name(m));
    auto c = kmp_config(200, m);
    c.replicas = 3;
    const auto a = run_benchmark(c);
    const auto b = run_benchmark(c);
    REQUIRE(a.replicas.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK(a.replicas[i].events == b.replicas[i].events);
      CHECK(a.replicas[i].observable == b.replicas[i].observable);
      CHECK(a.replicas[i].counters.comparisons == b.replicas[i].counters.comparisons);
      CHECK(a.replicas[i].counters.moves() == b.replicas[i].counters.moves());
      CHECK(a.replicas[i].counters.heap_swaps == b.replicas[i].counters.heap_swaps);
    }
    CHECK(a.replicas[0].events != a.replicas[1].events);
  }
}

TEST_CASE("HLM counters satisfy the per-event lower bounds") {
  auto c = kmp_config(1000, Method::kHashingLeaping);
  c.t_end = 3.0;
  const auto r = run_benchmark(c);
  CHECK(r.totals.moves() >= r.totals.events);
  CHECK(r.totals.comparisons >= r.totals.events);
}

TEST_CASE("counters can be switched off") {
  auto c = kmp_config(100, Method::kHashingLeaping);
  c.counters = false;
  const auto r = run_benchmark(c);
  CHECK(r.mean_events() > 0);
  std::ostringstream os;
  write_csv_row(os, r);
  const auto cols = split_csv_line(lines_of(os.str()).at(0));
  CHECK_FALSE(cols[11].empty());
  CHECK(cols[14].empty());
  CHECK(cols[19].empty());
}

TEST_CASE("sweep covers the cross product") {
  auto base = kmp_config(0, Method::kDirect);
  base.t_end = 0.2;
  const auto cells = sweep(base, {100, 1000},
                           {Method::kDirect, Method::kNextReaction,
                            Method::kCompositionRejection, Method::kHashingLeaping});
  CHECK(cells.size() == 8);
  for (const auto& cell : cells) CHECK(cell.result.has_value());
  std::ostringstream os;
  write_csv(os, cells);
  CHECK(lines_of(os.str()).size() == 9);
}

TEST_CASE("Gray-Scott sweep sizes map to 6 K^2 clocks") {
  RunConfig base;
  base.model.kind = models::ModelKind::kGrayScott;
  base.t_end = 0.5;
  const auto cells = sweep(base, {3, 10, 30}, {Method::kHashingLeaping});
  std::ostringstream os;
  write_csv(os, cells);
  const auto lines = lines_of(os.str());
  REQUIRE(lines.size() == 4);
  CHECK(split_csv_line(lines[1])[3] == "54");
  CHECK(split_csv_line(lines[2])[3] == "600");
  CHECK(split_csv_line(lines[3])[3] == "5400");
}

TEST_CASE("a failing sweep cell is recorded and the sweep continues") {
  auto base = kmp_config(0, Method::kDirect);
  base.t_end = 0.2;
  const auto bad = sweep(base, {0, 10}, {Method::kDirect});
  REQUIRE(bad.size() == 2);
  CHECK_FALSE(bad[0].result.has_value());
  CHECK_FALSE(bad[0].error.empty());
  CHECK(bad[1].result.has_value());
  std::ostringstream os;
  write_csv(os, bad);
  const auto cols = split_csv_line(lines_of(os.str()).at(1));
  CHECK(cols.size() == 25);
  CHECK(cols[23] == "error");
}

TEST_CASE("a single-cell sweep matches run_benchmark") {
  auto c = kmp_config(300, Method::kNextReaction);
  c.replicas = 2;
  const auto cells = sweep(c, {300}, {Method::kNextReaction});
  const auto direct = run_benchmark(c);
  REQUIRE(cells.size() == 1);
  REQUIRE(cells[0].result.has_value());
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(cells[0].result->replicas[i].events == direct.replicas[i].events);
    CHECK(cells[0].result->replicas[i].counters.heap_swaps ==
          direct.replicas[i].counters.heap_swaps);
  }
}

TEST_CASE("invalid configs are usage errors") {
  auto c = kmp_config(100, Method::kDirect);
  c.replicas = 0;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c.replicas = 1;
  c.t_end = -1.0;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c.t_end = 1.0;
  CHECK_NOTHROW(c.validate());
  CHECK(c.hlm_params().q == 10);
}

TEST_CASE("suggest_parameters follows the cost model") {
  CostModelConstants c;
  c.c_s = 2e-9;
  c.c_i = 1e-9;
  c.c_r = 5e-9;
  c.c_u_prime = 3e-9;
  c.c_u_double_prime = 4e-9;
  c.alpha = 1.5;
  const auto s = suggest_parameters(c, 10000, 0.2);
  CHECK(s.q_opt == 3000);
  const double expected = std::sqrt(2 * c.c_s * c.c_i) + c.c_s + c.c_u_prime +
                          c.c_u_double_prime * (1.0 - std::exp(-c.alpha * 0.2)) +
                          c.c_r / (c.alpha * 0.2);
  CHECK(s.predicted_cost == doctest::Approx(expected));

  c.c_s = 8e-9;
  const auto a = suggest_parameters(c, 5000, 0.2);
  const auto b = suggest_parameters(c, 10000, 0.2);
  CHECK(b.q_opt == 2 * a.q_opt);
  CHECK(suggest_parameters(c, 1, 1e-6).q_opt == 1);

  c.c_i = 0.0;
  CHECK_FALSE(c.valid());
  CHECK_THROWS(suggest_parameters(c, 100, 0.2));
  c.c_i = 1e-9;
  c.alpha = -1.0;
  CHECK_THROWS(suggest_parameters(c, 100, 0.2));
}

TEST_CASE("grid snapshots") {
  models::ModelSpec spec;
  spec.kind = models::ModelKind::kGrayScott;
  spec.size = 10;

  std::ostringstream initial;
  const auto r0 = emit_grid_snapshot(spec, Method::kHashingLeaping, {}, 1, 0.0, 10.0, initial);
  CHECK(r0.events == 0);
  CHECK_FALSE(r0.warning.has_value());
  auto lines = lines_of(initial.str());
  REQUIRE(lines.size() == 10);
  for (const auto& line : lines) {
    const auto cols = split_csv_line(line);
    REQUIRE(cols.size() == 10);
    for (const auto& v : cols) REQUIRE(v == "250");
  }

  spec.size = 3;
  std::ostringstream small;
  const auto r1 = emit_grid_snapshot(spec, Method::kNextReaction, {}, 1, 5.0, 10.0, small);
  CHECK(r1.time == 5.0);
  CHECK(r1.events > 0);
  lines = lines_of(small.str());
  REQUIRE(lines.size() == 3);
  for (const auto& line : lines) CHECK(split_csv_line(line).size() == 3);

  std::ostringstream late;
  const auto r2 = emit_grid_snapshot(spec, Method::kNextReaction, {}, 1, 50.0, 10.0, late);
  CHECK(r2.warning.has_value());
  CHECK(r2.time == 10.0);

  spec.kind = models::ModelKind::kKmp;
  std::ostringstream wrong;
  CHECK_THROWS_AS(emit_grid_snapshot(spec, Method::kDirect, {}, 1, 0.0, 1.0, wrong),
                  std::invalid_argument);
}

TEST_CASE("calibrated Q is within a factor of 4 of the fastest grid Q on KMP M=10^4") {
  models::ModelSpec spec;
  spec.kind = models::ModelKind::kKmp;
  spec.size = 10000;
  const double tau = 0.2;
  const auto constants = calibrate(spec, {tau, spec.size / 10});
  REQUIRE(constants.valid());
  const auto suggestion = suggest_parameters(constants, spec.size + 1, tau);
  MESSAGE("q_opt = " << suggestion.q_opt << ", alpha = " << constants.alpha);

  const std::vector<std::size_t> grid = {100, 333, 1000, 3333, 10000};
  std::vector<double> cost;
  for (std::size_t q : grid) {
    RunConfig c;
    c.model = spec;
    c.t_end = 20.0;
    c.replicas = 3;
    c.counters = false;
    c.hlm = HlmParams{tau, q};
    cost.push_back(*run_benchmark(c).mean_sec_per_million);
    MESSAGE("Q = " << q << ": " << cost.back() << " s per 1e6 events");
  }
  // Timings near the optimum are flat to within run-to-run noise, so every
  // grid point within 10% of the best counts as fastest.
  const double best = *std::min_element(cost.begin(), cost.end());
  bool close = false;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (cost[i] > 1.1 * best) continue;
    const double ratio = static_cast<double>(suggestion.q_opt) / static_cast<double>(grid[i]);
    close |= ratio <= 4.0 && ratio >= 0.25;
  }
  CHECK(close);
}
