#include "ssa/bench/calibration.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "ssa/engine_factory.hpp"

namespace ssa::bench {

namespace {

// Keeps measured loops from being optimised away.
volatile double g_sink = 0.0;

constexpr std::size_t kTargetOps = 1 << 20;
constexpr double kFloor = 1e-12;

template <typename F>
double seconds_of(F&& body) {
  const auto start = std::chrono::steady_clock::now();
  body();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

double median(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  const std::size_t n = xs.size();
  return n % 2 == 1 ? xs[n / 2] : 0.5 * (xs[n / 2 - 1] + xs[n / 2]);
}

std::vector<Time> uniform_times(std::size_t m, Time lo, Time hi, RngStream& rng) {
  std::vector<Time> t(m);
  for (auto& x : t) x = lo + (hi - lo) * rng.uniform();
  return t;
}

struct Micro {
  double scan = 0.0, empty = 0.0, rehash = 0.0, update = 0.0, relink = 0.0;
};

Micro measure_once(std::size_t m, const HlmParams& p, RngStream& rng) {
  Micro out;
  const std::size_t passes = std::max<std::size_t>(1, kTargetOps / m);

  {
    BucketTable table(uniform_times(m, 0.0, p.tau, rng), p);
    double acc = 0.0;
    // Same minimum search, ties to the lower id, as the engine's bucket scan.
    const double s = seconds_of([&] {
      for (std::size_t pass = 0; pass < passes; ++pass)
        for (std::size_t b = 0; b < table.bucket_count(); ++b) {
          std::uint32_t best = BucketTable::kNull;
          Time best_time = kNever;
          for (auto id = table.head(b); id != BucketTable::kNull; id = table.next(id)) {
            const Time t = table.time(id);
            if (t < best_time || (t == best_time && id < best)) {
              best = id;
              best_time = t;
            }
          }
          acc += best != BucketTable::kNull ? best_time : 0.0;
        }
    });
    g_sink = acc;
    out.scan = s / static_cast<double>(passes * m);
  }
  {
    const std::vector<Time> never(m, kNever);
    BucketTable table(never, p);
    const std::size_t bucket_passes = std::max<std::size_t>(1, kTargetOps / p.q);
    std::uint64_t empty = 0;
    // Walks forward until a nonempty bucket, like the engine does; the early
    // exit keeps the loop from being vectorised into an unrealistic cost.
    const double s = seconds_of([&] {
      for (std::size_t pass = 0; pass < bucket_passes; ++pass) {
        std::size_t b = 0;
        while (b < table.bucket_count() && table.head(b) == BucketTable::kNull) {
          ++b;
          ++empty;
        }
        g_sink = static_cast<double>(b);
      }
    });
    g_sink = static_cast<double>(empty);
    out.empty = s / static_cast<double>(bucket_passes * p.q);
  }
  {
    // Every record stays beyond each window it is re-hashed into.
    const Time far = p.tau * static_cast<double>(passes + 2);
    BucketTable table(uniform_times(m, far, far + p.tau, rng), p);
    const double s = seconds_of([&] {
      for (std::size_t pass = 0; pass < passes; ++pass) table.advance_window();
    });
    out.rehash = s / static_cast<double>(passes * m);
  }
  {
    BucketTable table(uniform_times(m, 0.0, p.tau, rng), p);
    const double width = p.tau / static_cast<double>(p.q);
    const double same = seconds_of([&] {
      for (std::size_t pass = 0; pass < passes; ++pass)
        for (ClockId id = 0; id < m; ++id) table.move(id, table.time(id));
    });
    // Shift each record by one bucket (wrapping inside the window) so every
    // update relinks.
    const double moved = seconds_of([&] {
      for (std::size_t pass = 0; pass < passes; ++pass)
        for (ClockId id = 0; id < m; ++id) {
          Time t = table.time(id) + width;
          if (t >= p.tau) t -= p.tau;
          table.move(id, t);
        }
    });
    const double ops = static_cast<double>(passes * m);
    out.update = same / ops;
    out.relink = moved / ops - out.update;
  }
  return out;
}

}  // namespace

bool CostModelConstants::valid() const {
  return c_s > 0.0 && c_i > 0.0 && c_r > 0.0 && c_u_prime > 0.0 && c_u_double_prime > 0.0 &&
         alpha > 0.0;
}

ParameterSuggestion suggest_parameters(const CostModelConstants& c, std::size_t clocks,
                                       double tau) {
  if (!c.valid()) throw std::invalid_argument("cost constants must all be positive");
  if (!(tau > 0.0)) throw std::invalid_argument("tau must be positive");
  if (clocks == 0) throw std::invalid_argument("need at least one clock");
  ParameterSuggestion s;
  const double q = c.alpha * static_cast<double>(clocks) * tau * std::sqrt(c.c_s / (2.0 * c.c_i));
  s.q_opt = static_cast<std::size_t>(std::max(1.0, std::round(q)));
  const double c_u = c.c_u_prime + c.c_u_double_prime * (1.0 - std::exp(-c.alpha * tau));
  s.predicted_cost = std::sqrt(2.0 * c.c_s * c.c_i) + c.c_s + c_u + c.c_r / (c.alpha * tau);
  return s;
}

CostModelConstants calibrate(const models::ModelSpec& spec, const HlmParams& params,
                             const CalibrationOptions& options) {
  params.validate();
  if (options.repetitions < 1) throw std::invalid_argument("need at least one repetition");
  if (!(options.alpha_t_end > 0.0)) throw std::invalid_argument("alpha run needs t_end > 0");
  const std::size_t clocks = models::make_model(spec)->clock_count();

  RngStream rng(options.seed);
  std::vector<Micro> runs;
  for (std::size_t r = 0; r < options.repetitions; ++r)
    runs.push_back(measure_once(clocks, params, rng));
  auto med = [&](double Micro::*field) {
    std::vector<double> xs;
    for (const auto& run : runs) xs.push_back(run.*field);
    return std::max(kFloor, median(std::move(xs)));
  };

  CostModelConstants c;
  c.c_s = med(&Micro::scan);
  c.c_i = med(&Micro::empty);
  c.c_r = med(&Micro::rehash);
  c.c_u_prime = med(&Micro::update);
  c.c_u_double_prime = med(&Micro::relink);

  EngineOptions engine_options;
  engine_options.hlm = params;
  auto engine = make_scheduler(Method::kHashingLeaping, models::make_model(spec), options.seed,
                               engine_options);
  const auto events = engine->run_until(options.alpha_t_end);
  c.alpha = std::max(kFloor, static_cast<double>(events) /
                                 (static_cast<double>(clocks) * options.alpha_t_end));
  return c;
}

}  // namespace ssa::bench
