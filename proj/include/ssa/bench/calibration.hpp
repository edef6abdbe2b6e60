#pragma once

#include <cstddef>

#include "ssa/bucket_table.hpp"
#include "ssa/models/model_factory.hpp"

namespace ssa::bench {

/// Per-operation costs of the hashing-leaping method in seconds, plus the
/// event intensity alpha (events per clock per unit time).
struct CostModelConstants {
  /// One comparison in a bucket scan.
  double c_s = 0.0;
  /// Moving past one empty bucket.
  double c_i = 0.0;
  /// Re-hashing one record at a window leap.
  double c_r = 0.0;
  /// Updating a record that stays in its bucket.
  double c_u_prime = 0.0;
  /// Extra cost when the update relinks the record.
  double c_u_double_prime = 0.0;
  double alpha = 0.0;

  bool valid() const;
};

struct ParameterSuggestion {
  std::size_t q_opt = 1;
  /// Predicted seconds per event at q_opt.
  double predicted_cost = 0.0;
};

/// Q_opt = alpha M tau sqrt(C_s / (2 C_i)) rounded to >= 1, and the per-event
/// cost sqrt(2 C_s C_i) + C_s + C_u(tau) + C_r / (alpha tau) with
/// C_u(tau) = C_u' + C_u'' (1 - exp(-alpha tau)). Throws on nonpositive
/// constants.
ParameterSuggestion suggest_parameters(const CostModelConstants& c, std::size_t clocks,
                                       double tau);

struct CalibrationOptions {
  /// Each constant is the median over this many repetitions.
  std::size_t repetitions = 5;
  /// Horizon of the run that measures alpha.
  Time alpha_t_end = 1.0;
  std::uint64_t seed = 1;
};

/// Times each bucket-table operation on a table the size of `spec` and
/// measures alpha from a short HLM run with `params`.
CostModelConstants calibrate(const models::ModelSpec& spec, const HlmParams& params,
                             const CalibrationOptions& options = {});

}  // namespace ssa::bench
