#pragma once

// Block-wise comparison: a universe value is written in theta*L bits and cut
// into theta blocks of L bits, block 1 being the most significant.

#include <cstdint>
#include <vector>

namespace polyoracle::ls {

enum class Cmp : std::uint8_t { Less = 0, Equal = 1, Greater = 2 };

char to_char(Cmp c);

using CmpTuple = std::vector<Cmp>;

struct ComparisonSets {
  std::vector<CmpTuple> equal;
  std::vector<CmpTuple> less;
  std::vector<CmpTuple> greater;

  const std::vector<CmpTuple>& of(Cmp c) const;
};

/// C^= = {=}^theta; C^< = union over q of {=}^{q-1} x {<} x {<,=,>}^{theta-q};
/// C^> = everything else.
ComparisonSets comparison_tuple_sets(std::uint32_t theta);

/// Overall comparison implied by per-block outcomes: the first non-'='.
Cmp combine(const CmpTuple& blocks);

Cmp compare(std::uint64_t x, std::uint64_t y);

/// ceil(log2 s) for s >= 1.
std::uint32_t ceil_log2(std::uint64_t s);

/// L = ceil(r * ceil(log2 s) / theta), at least 1.
std::uint32_t block_length(std::uint64_t s, std::uint32_t r, std::uint32_t theta);

/// Block q (1-based, most significant first) of `value` split into theta
/// blocks of L bits.
std::uint64_t block_of(std::uint64_t value, std::uint32_t q, std::uint32_t theta, std::uint32_t L);

/// Variable space of the formulation at instance size s: rows 0..s, theta
/// blocks, 2^L block values and three comparison outcomes.
struct Layout {
  std::uint64_t s = 2;
  std::uint32_t r = 1;
  std::uint32_t theta = 1;
  std::uint32_t block_len = 1;

  /// Throws PreconditionViolated for s < 2 or theta == 0, TooLarge when the
  /// variable count overflows 64 bits.
  static Layout make(std::uint64_t s, std::uint32_t r, std::uint32_t theta);

  std::uint64_t rows() const { return s + 1; }
  std::uint64_t block_values() const { return std::uint64_t{1} << block_len; }
  std::uint64_t variable_count() const;
  std::uint64_t line(Cmp c, std::uint64_t row, std::uint32_t q) const;
  std::uint64_t index(Cmp c, std::uint64_t row, std::uint32_t q, std::uint64_t a) const;

  bool operator==(const Layout&) const = default;
};

/// 3 (s+1) theta 2^L.
std::uint64_t variable_count(std::uint64_t s, std::uint32_t r, std::uint32_t theta);

}  // namespace polyoracle::ls
