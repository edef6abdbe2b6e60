#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace ssa::oracle {

/// Upper tail P[X >= x] of a chi-square law with `dof` degrees of freedom.
double chi_square_survival(double x, double dof);

/// Kolmogorov limiting survival function P[K > lambda].
double kolmogorov_survival(double lambda);

struct ChiSquareResult {
  double statistic = 0.0;
  /// Degrees of freedom after merging (bins - 1).
  double dof = 0.0;
  double p_value = 1.0;
  /// Bins left after merging sparse ones.
  std::size_t bins = 0;
};

/// Pearson goodness of fit of `observed` counts against `probabilities`.
/// Adjacent bins are pooled, in index order, until each pooled bin expects
/// at least 5 counts; a short tail joins the last full bin. Bins with zero
/// probability must be empty. One pooled bin yields p = 1.
ChiSquareResult chi_square_gof(std::span<const std::uint64_t> observed,
                               std::span<const double> probabilities);

/// sup |F_n - F| for a sample against a continuous CDF. Sorts `samples`.
double ks_distance(std::vector<double>& samples, const std::function<double(double)>& cdf);

/// sup |F_a - F_b| between two empirical CDFs. Sorts both inputs.
double ks_distance(std::vector<double>& a, std::vector<double>& b);

/// Asymptotic p-value for a KS distance with effective sample size `n`,
/// using Stephens' small-sample correction of the scaling.
double ks_p_value(double distance, double n);

/// Exp(rate) distribution function.
std::function<double(double)> exponential_cdf(double rate);

}  // namespace ssa::oracle
