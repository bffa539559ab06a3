#include "polyoracle/common/caps.hpp"

#include <cstdlib>
#include <string>

namespace polyoracle {

std::uint64_t enumeration_cap() {
  if (const char* env = std::getenv("POLYORACLE_CAP")) {
    try {
      std::size_t used = 0;
      unsigned long long v = std::stoull(env, &used);
      if (used == std::string(env).size() && v > 0) return v;
    } catch (...) {
    }
  }
  return kDefaultEnumerationCap;
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b, std::uint64_t fallback) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) return fallback;
  return out;
}

}  // namespace polyoracle
