#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "ssa/bucket_table.hpp"
#include "ssa/process_model.hpp"

namespace ssa::models {

enum class ModelKind { kKmp, kRandomCrn, kGrayScott, kOregonator, kConstant };

std::string_view model_kind_name(ModelKind kind);
/// Accepts "kmp", "crn", "gray-scott", "oregonator", "constant".
ModelKind parse_model_kind(std::string_view name);

/// Everything needed to build a fresh model instance.
struct ModelSpec {
  ModelKind kind = ModelKind::kKmp;
  /// KMP: oscillators M. CRN: reactions M. Gray-Scott: grid side K.
  std::size_t size = 100;
  std::uint64_t structure_seed = 1;
  std::array<std::int64_t, 3> oregonator_initial = {500, 1000, 2000};
  std::vector<double> constant_rates = {1.0, 2.0, 3.0, 4.0, 5.0};
};

std::unique_ptr<ProcessModel> make_model(const ModelSpec& spec);

/// System scale as tabulated: oscillators for KMP, reactions for CRN,
/// clocks (6 K^2) for Gray-Scott, clocks otherwise.
std::size_t scale_of(const ModelSpec& spec);

/// Window length and bucket count used for each model in the benchmarks:
/// KMP tau 0.2, Q = M/10; CRN tau 0.1, Q = M/20; Gray-Scott tau 0.5,
/// Q = M/2; Oregonator tau 0.01, Q = 5. Q is clamped to at least 1.
HlmParams default_hlm_params(const ModelSpec& spec);

}  // namespace ssa::models
