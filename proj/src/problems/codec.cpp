#include "polyoracle/problems/codec.hpp"

#include <cmath>

#include "polyoracle/common/error.hpp"

namespace polyoracle::problems {

namespace {

using u128 = unsigned __int128;
constexpr u128 kHuge = u128{1} << 100;

// base^exp, saturating at kHuge.
u128 spow(std::uint64_t base, std::size_t exp) {
  u128 out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    out *= base;
    if (out >= kHuge) return kHuge;
  }
  return out;
}

}  // namespace

Code encode_tuple(std::span<const std::uint64_t> c) {
  const std::size_t r = c.size();
  if (r == 0) throw Error(ErrorKind::ValueOutOfRange, "empty tuple");
  std::uint64_t M = 0;
  for (auto x : c) {
    if (x == 0) throw Error(ErrorKind::ValueOutOfRange, "tuple components are 1-based");
    M = std::max(M, x);
  }
  std::size_t p = 0;
  while (c[p] != M) ++p;

  u128 index = spow(M - 1, r);
  for (std::size_t q = 0; q < p; ++q) index += spow(M - 1, q) * spow(M, r - q - 1);
  u128 rem = 0;
  for (std::size_t q = 0; q < r; ++q) {
    if (q == p) continue;
    rem = rem * (q < p ? M - 1 : M) + (c[q] - 1);
    if (rem >= kHuge) break;
  }
  index += rem;
  if (index >= u128{UINT64_MAX}) throw Error(ErrorKind::ValueOutOfRange, "tuple code overflows");
  return static_cast<Code>(index) + 1;
}

Code encode_tuple(std::initializer_list<std::uint64_t> components) {
  return encode_tuple(std::span<const std::uint64_t>(components.begin(), components.size()));
}

bool decode_tuple(Code code, std::span<std::uint64_t> out) {
  const std::size_t r = out.size();
  if (code == 0 || r == 0) return false;
  const u128 index = code - 1;
  // Largest M with (M-1)^r <= index.
  auto M = static_cast<std::uint64_t>(std::pow(static_cast<long double>(index), 1.0L / r)) + 1;
  while (M > 1 && spow(M - 1, r) > index) --M;
  while (spow(M, r) <= index) ++M;

  u128 rem = index - spow(M - 1, r);
  std::size_t p = 0;
  for (; p < r; ++p) {
    const u128 block = spow(M - 1, p) * spow(M, r - p - 1);
    if (rem < block) break;
    rem -= block;
  }
  out[p] = M;
  for (std::size_t q = r; q-- > 0;) {
    if (q == p) continue;
    const std::uint64_t radix = q < p ? M - 1 : M;
    out[q] = static_cast<std::uint64_t>(rem % radix) + 1;
    rem /= radix;
  }
  return true;
}

std::vector<std::uint64_t> decode_tuple(Code code, std::uint32_t r) {
  std::vector<std::uint64_t> out(r);
  if (!decode_tuple(code, out)) throw Error(ErrorKind::ValueOutOfRange, "code 0 has no tuple");
  return out;
}

}  // namespace polyoracle::problems
