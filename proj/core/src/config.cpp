#include "powerlambda/config.hpp"

#include <cstdlib>
#include <string>

namespace powerlambda {

Limits limits_from_environment() {
  Limits limits;
  if (const char* raw = std::getenv("LAMBDA_MAX_ORDER")) {
    try {
      std::size_t used = 0;
      const long long value = std::stoll(raw, &used);
      if (used == std::string(raw).size() && value > 0) {
        limits.max_group_order = static_cast<std::size_t>(value);
      }
    } catch (const std::exception&) {
      // unparsable override: keep the default
    }
  }
  return limits;
}

}  // namespace powerlambda
