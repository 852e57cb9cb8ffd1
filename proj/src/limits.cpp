#include "ferrers/limits.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace ferrers {

OracleLimits OracleLimits::from_environment() {
  OracleLimits limits;
  const char* raw = std::getenv("FB_CAP_VERTICES");
  if (raw == nullptr) return limits;
  std::size_t cap = 0;
  const auto* end = raw + std::strlen(raw);
  const auto [ptr, ec] = std::from_chars(raw, end, cap);
  if (ec == std::errc{} && ptr == end && cap > 0) limits = uniform(cap);
  return limits;
}

}  // namespace ferrers
