#include <cmath>
#include <set>
#include <vector>

#include "doctest.h"
#include "ssa/dependency_graph.hpp"
#include "ssa/op_counters.hpp"
#include "ssa/oracle/statistics.hpp"
#include "ssa/rng.hpp"
#include "ssa/time_rescale.hpp"

using namespace ssa;

TEST_CASE("inverse transform maps u to -ln(1-u)/rate") {
  CHECK(inverse_exponential(0.5, 1.0) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
  CHECK(inverse_exponential(0.0, 1.0) == 0.0);
  CHECK(inverse_exponential(0.75, 2.0) == doctest::Approx(std::log(4.0) / 2.0).epsilon(1e-15));
  // A draw from the stream goes through the same map.
  RngStream a(17), b(17);
  const double u = a.uniform_open();
  CHECK(b.exponential(3.0) == inverse_exponential(u, 3.0));
}

TEST_CASE("exponential samples have mean 1/rate within 1% over 10^6 draws") {
  RngStream rng(2024);
  double sum = 0.0;
  const int n = 1'000'000;
  for (int i = 0; i < n; ++i) sum += sample_exponential(rng, 2.0);
  CHECK(sum / n == doctest::Approx(0.5).epsilon(0.01));
}

TEST_CASE("exponential samples are strictly positive and reject bad rates") {
  RngStream rng(5);
  for (int i = 0; i < 100000; ++i) REQUIRE(rng.exponential(1e3) > 0.0);
  CHECK_THROWS_AS(rng.exponential(0.0), ContractViolation);
  CHECK_THROWS_AS(rng.exponential(-1.0), ContractViolation);
}

TEST_CASE("uniform draws stay in range") {
  RngStream rng(9);
  for (int i = 0; i < 100000; ++i) {
    const double u = rng.uniform();
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
    const double v = rng.uniform_open();
    REQUIRE(v > 0.0);
    REQUIRE(v < 1.0);
    REQUIRE(rng.uniform_index(7) < 7);
  }
  CHECK_THROWS_AS(rng.uniform_index(0), ContractViolation);
}

TEST_CASE("uniform_index is roughly uniform") {
  RngStream rng(31);
  std::vector<std::uint64_t> counts(4, 0);
  for (int i = 0; i < 100000; ++i) ++counts[rng.uniform_index(4)];
  const std::vector<double> p(4, 0.25);
  CHECK(oracle::chi_square_gof(counts, p).p_value > 1e-3);
}

TEST_CASE("identical seeds reproduce, distinct seeds diverge") {
  RngStream a(123), b(123), c(124);
  bool differs = false;
  for (int i = 0; i < 100; ++i) {
    const auto x = a.next_raw();
    CHECK(x == b.next_raw());
    differs |= x != c.next_raw();
  }
  CHECK(differs);
}

TEST_CASE("derived seeds are distinct across indices and bases") {
  std::set<std::uint64_t> seen;
  for (std::uint64_t base = 0; base < 10; ++base)
    for (std::uint64_t i = 0; i < 1000; ++i) seen.insert(derive_seed(base, i));
  CHECK(seen.size() == 10000);
}

TEST_CASE("rescale_time exact values") {
  CHECK(rescale_time(5.0, 2.0, 1.0, 3.0) == 3.0);
  CHECK(rescale_time(7.5, 2.0, 4.0, 4.0) == 7.5);
  CHECK(rescale_time(5.0, 2.0, 1.0, 0.0) == kNever);
  CHECK(rescale_time(2.0, 2.0, 1.0, 5.0) == 2.0);
  CHECK(rescale_time(4.0, 1.0, 2.0, 1.0) == 7.0);
}

TEST_CASE("rescale_time contract") {
  CHECK_THROWS_AS(rescale_time(5.0, 2.0, 0.0, 1.0), ContractViolation);
  CHECK_THROWS_AS(rescale_time(1.0, 2.0, 1.0, 1.0), ContractViolation);
}

TEST_CASE("rescale_time is monotone in t_old and never below t_fire") {
  RngStream rng(3);
  for (int i = 0; i < 10000; ++i) {
    const double t_fire = 10.0 * rng.uniform();
    const double a = t_fire + rng.exponential(1.0);
    const double b = a + rng.exponential(1.0);
    const double r_old = 0.1 + 5.0 * rng.uniform();
    const double r_new = 0.1 + 5.0 * rng.uniform();
    const double ra = rescale_time(a, t_fire, r_old, r_new);
    const double rb = rescale_time(b, t_fire, r_old, r_new);
    REQUIRE(ra >= t_fire);
    REQUIRE(ra <= rb);
  }
}

TEST_CASE("rescaled Exp(r_old) overshoots follow Exp(r_new): KS distance < 0.005 at 10^6") {
  RngStream rng(77);
  const double t_fire = 3.0, r_old = 1.7, r_new = 4.2;
  std::vector<double> overshoot(1'000'000);
  for (auto& x : overshoot)
    x = rescale_time(t_fire + rng.exponential(r_old), t_fire, r_old, r_new) - t_fire;
  CHECK(oracle::ks_distance(overshoot, oracle::exponential_cdf(r_new)) < 0.005);
}

TEST_CASE("reschedule handles disabled clocks") {
  RngStream rng(8);
  CHECK(reschedule(kNever, 2.0, 0.0, 0.0, rng) == kNever);
  CHECK(reschedule(5.0, 2.0, 1.0, 0.0, rng) == kNever);
  const double fresh = reschedule(kNever, 2.0, 0.0, 3.0, rng);
  CHECK(fresh > 2.0);
  CHECK(fresh < kNever);
  CHECK(reschedule(5.0, 2.0, 1.0, 3.0, rng) == 3.0);
}

TEST_CASE("dependency graph puts self first and rejects bad lists") {
  DependencyGraph g({{1}, {0, 1}, {}});
  CHECK(g.clock_count() == 3);
  CHECK(std::vector<ClockId>(g.out_edges(0).begin(), g.out_edges(0).end()) ==
        std::vector<ClockId>{0, 1});
  CHECK(std::vector<ClockId>(g.out_edges(1).begin(), g.out_edges(1).end()) ==
        std::vector<ClockId>{0, 1});
  CHECK(g.out_degree(2) == 1);
  CHECK(g.max_out_degree() == 2);
  CHECK(g.edge_count() == 5);
  CHECK_THROWS_AS(DependencyGraph({{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(DependencyGraph(std::vector<std::vector<ClockId>>{{3}}), std::invalid_argument);
  CHECK_THROWS_AS(g.out_edges(3), ContractViolation);
}

TEST_CASE("dependency graph builder deduplicates") {
  DependencyGraphBuilder b(3);
  b.add_edge(0, 2);
  b.add_edge(0, 2);
  b.add_edge(0, 0);
  b.add_edge(2, 1);
  const auto g = b.build();
  CHECK(g.out_degree(0) == 2);
  CHECK(g.out_edges(0)[0] == 0);
  CHECK(g.out_degree(1) == 1);
  CHECK(g.out_degree(2) == 2);
}

TEST_CASE("per-event ratios are zero without events") {
  OpCounters c;
  c.comparisons = 10;
  CHECK(per_event(c.comparisons, c.events) == 0.0);
  c.events = 4;
  CHECK(per_event(c.comparisons, c.events) == 2.5);
  OpCounters d = c;
  d.moves_with_relink = 3;
  d.moves_without_relink = 2;
  c += d;
  CHECK(c.events == 8);
  CHECK(c.comparisons == 20);
  CHECK(c.moves() == 5);
  CHECK(c.search_and_moves() == 25);
}
