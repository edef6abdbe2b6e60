#pragma once

#include <cstdint>
#include <memory>

#include "ssa/bucket_table.hpp"
#include "ssa/composition_rejection.hpp"
#include "ssa/direct_method.hpp"
#include "ssa/first_reaction.hpp"
#include "ssa/hashing_leaping.hpp"
#include "ssa/next_reaction.hpp"
#include "ssa/scheduler.hpp"

namespace ssa {

struct EngineOptions {
  HlmParams hlm;
  CrmParams crm;
};

std::unique_ptr<Scheduler> make_scheduler(Method method, std::unique_ptr<ProcessModel> model,
                                          std::uint64_t seed, const EngineOptions& options = {});

}  // namespace ssa
