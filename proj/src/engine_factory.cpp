#include "ssa/engine_factory.hpp"

namespace ssa {

std::unique_ptr<Scheduler> make_scheduler(Method method, std::unique_ptr<ProcessModel> model,
                                          std::uint64_t seed, const EngineOptions& options) {
  switch (method) {
    case Method::kDirect:
      return std::make_unique<DirectMethod>(std::move(model), seed);
    case Method::kFirstReaction:
      return std::make_unique<FirstReactionMethod>(std::move(model), seed);
    case Method::kNextReaction:
      return std::make_unique<NextReactionMethod>(std::move(model), seed);
    case Method::kCompositionRejection:
      return std::make_unique<CompositionRejectionMethod>(std::move(model), seed, options.crm);
    case Method::kHashingLeaping:
      return std::make_unique<HashingLeapingMethod>(std::move(model), seed, options.hlm);
  }
  throw std::invalid_argument("unknown method");
}

}  // namespace ssa
