#include "lfkmsd/parallel.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace lfkmsd {

unsigned default_thread_count() noexcept {
  if (const char* env = std::getenv("LFKMSD_THREADS"); env != nullptr) {
    unsigned value = 0;
    const auto [ptr, ec] = std::from_chars(env, env + std::strlen(env), value);
    if (ec == std::errc{} && *ptr == '\0' && value > 0) return value;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace lfkmsd
