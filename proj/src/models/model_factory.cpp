#include "ssa/models/model_factory.hpp"

#include <algorithm>
#include <stdexcept>

#include "ssa/models/constant_rate.hpp"
#include "ssa/models/gray_scott.hpp"
#include "ssa/models/kmp.hpp"
#include "ssa/models/oregonator.hpp"
#include "ssa/models/random_crn.hpp"

namespace ssa::models {

std::string_view model_kind_name(ModelKind kind) {
  switch (kind) {
    case ModelKind::kKmp: return "kmp";
    case ModelKind::kRandomCrn: return "crn";
    case ModelKind::kGrayScott: return "gray-scott";
    case ModelKind::kOregonator: return "oregonator";
    case ModelKind::kConstant: return "constant";
  }
  return "?";
}

ModelKind parse_model_kind(std::string_view name) {
  for (ModelKind k : {ModelKind::kKmp, ModelKind::kRandomCrn, ModelKind::kGrayScott,
                      ModelKind::kOregonator, ModelKind::kConstant})
    if (model_kind_name(k) == name) return k;
  throw std::invalid_argument("unknown model '" + std::string(name) + "'");
}

std::unique_ptr<ProcessModel> make_model(const ModelSpec& spec) {
  switch (spec.kind) {
    case ModelKind::kKmp: {
      KmpParams params;
      params.oscillators = spec.size;
      return std::make_unique<KmpChain>(std::move(params));
    }
    case ModelKind::kRandomCrn:
      return std::make_unique<RandomCrn>(
          RandomCrnParams{.reactions = spec.size, .structure_seed = spec.structure_seed});
    case ModelKind::kGrayScott:
      return std::make_unique<GrayScottGrid>(GrayScottParams{.side = spec.size});
    case ModelKind::kOregonator:
      return std::make_unique<Oregonator>(OregonatorParams{.initial = spec.oregonator_initial});
    case ModelKind::kConstant:
      return std::make_unique<ConstantRateModel>(spec.constant_rates);
  }
  throw std::invalid_argument("unknown model kind");
}

std::size_t scale_of(const ModelSpec& spec) {
  switch (spec.kind) {
    case ModelKind::kKmp:
    case ModelKind::kRandomCrn: return spec.size;
    case ModelKind::kGrayScott: return GrayScottGrid::kChannels * spec.size * spec.size;
    case ModelKind::kOregonator: return 5;
    case ModelKind::kConstant: return spec.constant_rates.size();
  }
  return 0;
}

HlmParams default_hlm_params(const ModelSpec& spec) {
  const std::size_t m = scale_of(spec);
  auto at_least_one = [](std::size_t q) { return std::max<std::size_t>(q, 1); };
  switch (spec.kind) {
    case ModelKind::kKmp: return {0.2, at_least_one(m / 10)};
    case ModelKind::kRandomCrn: return {0.1, at_least_one(m / 20)};
    case ModelKind::kGrayScott: return {0.5, at_least_one(m / 2)};
    case ModelKind::kOregonator: return {0.01, 5};
    case ModelKind::kConstant: return {0.1, at_least_one(m)};
  }
  return {};
}

}  // namespace ssa::models
