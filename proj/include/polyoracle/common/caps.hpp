#pragma once

#include <cstddef>
#include <cstdint>

namespace polyoracle {

inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;
inline constexpr std::size_t kDefaultMonomialCap = 1'000'000;

/// Enumeration cap for literal monomial streams and point evaluation.
/// The POLYORACLE_CAP environment variable overrides the default.
std::uint64_t enumeration_cap();

/// a*b, or `fallback` when the product overflows 64 bits.
std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b,
                             std::uint64_t fallback = UINT64_MAX);

}  // namespace polyoracle
