#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace ssa {

/// Simulation time in absolute model units.
using Time = double;

/// Index of an exponential clock, in [0, clock_count).
using ClockId = std::uint32_t;

/// Scheduled time of a disabled (zero-rate) clock. Compares greater than
/// every finite time.
inline constexpr Time kNever = std::numeric_limits<Time>::infinity();

/// One ring of one clock.
struct Event {
  Time time = 0.0;
  ClockId clock = 0;

  friend bool operator==(const Event&, const Event&) = default;
};

/// Raised when a caller breaks an operation's precondition.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

namespace detail {
[[noreturn]] void contract_failed(const char* expr, const char* file, int line,
                                  const std::string& msg);
}  // namespace detail

}  // namespace ssa

#define SSA_EXPECTS(cond, msg)                                             \
  do {                                                                     \
    if (!(cond)) [[unlikely]]                                              \
      ::ssa::detail::contract_failed(#cond, __FILE__, __LINE__, (msg));    \
  } while (false)
