#include "ssa/oracle/statistics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include <boost/math/special_functions/gamma.hpp>

namespace ssa::oracle {

double chi_square_survival(double x, double dof) {
  if (!(dof > 0.0)) throw std::invalid_argument("chi-square needs positive degrees of freedom");
  if (x <= 0.0) return 1.0;
  return boost::math::gamma_q(dof / 2.0, x / 2.0);
}

double kolmogorov_survival(double lambda) {
  if (lambda <= 0.0) return 1.0;
  constexpr double pi = std::numbers::pi;
  if (lambda < 1.18) {
    // Theta-function form converges fast for small arguments.
    const double c = -pi * pi / (8.0 * lambda * lambda);
    double cdf = 0.0;
    for (int k = 1; k <= 50; ++k) {
      const double odd = 2.0 * k - 1.0;
      const double term = std::exp(c * odd * odd);
      cdf += term;
      if (term < 1e-17 * cdf) break;
    }
    cdf *= std::sqrt(2.0 * pi) / lambda;
    return std::clamp(1.0 - cdf, 0.0, 1.0);
  }
  double sum = 0.0;
  for (int k = 1; k <= 100; ++k) {
    const double term = std::exp(-2.0 * k * k * lambda * lambda);
    sum += (k % 2 == 1) ? term : -term;
    if (term < 1e-17) break;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

ChiSquareResult chi_square_gof(std::span<const std::uint64_t> observed,
                               std::span<const double> probabilities) {
  if (observed.size() != probabilities.size() || observed.empty())
    throw std::invalid_argument("observed and probability vectors must match");
  double total_p = 0.0;
  std::uint64_t n = 0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    if (probabilities[i] < 0.0) throw std::invalid_argument("negative probability");
    total_p += probabilities[i];
    n += observed[i];
  }
  if (!(total_p > 0.0)) throw std::invalid_argument("probabilities sum to zero");

  ChiSquareResult res;
  std::vector<std::pair<double, double>> pooled;  // (observed, expected)
  double obs = 0.0, exp = 0.0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    const double e = static_cast<double>(n) * probabilities[i] / total_p;
    if (e == 0.0 && observed[i] > 0) {
      res.statistic = std::numeric_limits<double>::infinity();
      res.p_value = 0.0;
      res.bins = observed.size();
      return res;
    }
    obs += static_cast<double>(observed[i]);
    exp += e;
    if (exp >= 5.0) {
      pooled.emplace_back(obs, exp);
      obs = exp = 0.0;
    }
  }
  if (exp > 0.0 || obs > 0.0) {
    if (pooled.empty()) {
      pooled.emplace_back(obs, exp);
    } else {
      pooled.back().first += obs;
      pooled.back().second += exp;
    }
  }
  res.bins = pooled.size();
  if (pooled.size() < 2) return res;
  for (auto [o, e] : pooled) res.statistic += (o - e) * (o - e) / e;
  res.dof = static_cast<double>(pooled.size() - 1);
  res.p_value = chi_square_survival(res.statistic, res.dof);
  return res;
}

double ks_distance(std::vector<double>& samples, const std::function<double(double)>& cdf) {
  if (samples.empty()) throw std::invalid_argument("KS distance of an empty sample");
  std::sort(samples.begin(), samples.end());
  const auto n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double f = cdf(samples[i]);
    d = std::max({d, static_cast<double>(i + 1) / n - f, f - static_cast<double>(i) / n});
  }
  return d;
}

double ks_distance(std::vector<double>& a, std::vector<double>& b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("KS distance of an empty sample");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const auto na = static_cast<double>(a.size());
  const auto nb = static_cast<double>(b.size());
  std::size_t i = 0, j = 0;
  double d = 0.0;
  // Advance through tied values together so the ECDFs are compared only
  // between distinct sample points.
  while (i < a.size() && j < b.size()) {
    const double x = std::min(a[i], b[j]);
    while (i < a.size() && a[i] == x) ++i;
    while (j < b.size() && b[j] == x) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
  }
  return d;
}

double ks_p_value(double distance, double n) {
  if (!(n > 0.0)) throw std::invalid_argument("KS needs a positive sample size");
  const double root = std::sqrt(n);
  return kolmogorov_survival((root + 0.12 + 0.11 / root) * distance);
}

std::function<double(double)> exponential_cdf(double rate) {
  if (!(rate > 0.0)) throw std::invalid_argument("exponential rate must be positive");
  return [rate](double x) { return x <= 0.0 ? 0.0 : -std::expm1(-rate * x); };
}

}  // namespace ssa::oracle
