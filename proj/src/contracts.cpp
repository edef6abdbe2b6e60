#include <sstream>

#include "ssa/types.hpp"

namespace ssa {

namespace detail {
void contract_failed(const char* expr, const char* file, int line,
                     const std::string& msg) {
  std::ostringstream os;
  os << msg << " [" << expr << " at " << file << ':' << line << ']';
  throw ContractViolation(os.str());
}
}  // namespace detail

}  // namespace ssa
