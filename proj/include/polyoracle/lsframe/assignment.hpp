#pragma once

// Points of the formulation's variable space. A line (c, i, q) holds the
// 2^L values x^c_{i,q,a}; lines are stored as sorted runs of equal value so
// that tables with billions of entries stay small.

#include <cstdint>
#include <vector>

#include "polyoracle/common/bigint.hpp"
#include "polyoracle/lsframe/comparison.hpp"
#include "polyoracle/lsframe/ls_problem.hpp"

namespace polyoracle::ls {

struct Run {
  std::uint64_t begin = 0;  // inclusive
  std::uint64_t end = 0;    // exclusive
  BigInt value;

  bool operator==(const Run&) const = default;
};

class BlockAssignment {
 public:
  explicit BlockAssignment(const Layout& layout);

  const Layout& layout() const { return layout_; }
  /// Number of variables of the point.
  std::uint64_t size() const { return layout_.variable_count(); }

  /// Nonzero runs of a line, ascending and disjoint.
  const std::vector<Run>& line(Cmp c, std::uint64_t row, std::uint32_t q) const;
  /// Replaces a line. Zero-valued runs are dropped; throws MalformedInput
  /// for overlapping, unsorted or out-of-range runs.
  void set_line(Cmp c, std::uint64_t row, std::uint32_t q, std::vector<Run> runs);

  BigInt at(Cmp c, std::uint64_t row, std::uint32_t q, std::uint64_t a) const;
  /// Pointer to the nonzero value at (c, row, q, a), nullptr for zero.
  const BigInt* find(Cmp c, std::uint64_t row, std::uint32_t q, std::uint64_t a) const;
  /// True when some line of the row has a nonzero entry.
  bool row_active(std::uint64_t row) const;
  BigInt at(std::uint64_t index) const;

  BigInt max_magnitude() const;

  /// All variables in index order. Throws CapExceeded above `cap` entries.
  std::vector<BigInt> to_dense(std::uint64_t cap) const;
  static BlockAssignment from_dense(const Layout& layout, const std::vector<BigInt>& values);

  bool operator==(const BlockAssignment&) const = default;

 private:
  Layout layout_;
  std::vector<std::vector<Run>> lines_;
};

/// Value of row i as compared by the table: element codes are stored
/// 0-based (code - 1). Row 0 and row m+1 are the sentinels; they reuse the
/// values 0 and n^r - 1 but break a last-block tie as '<' and '>'
/// respectively, which places them strictly below code 1 and strictly
/// between n^r and n^r + 1.
struct RowKey {
  std::uint64_t value = 0;
  Cmp tie = Cmp::Equal;
};

/// Keys of rows 0..m+1.
std::vector<RowKey> row_keys(const LSInstance& inst);

/// phi: x^c_{i,q,a} = 1 iff i <= m+1 and comparing block q of row i with a
/// gives c (sentinel ties resolved as above).
BlockAssignment compute_assignment(const LSInstance& inst, std::uint32_t theta);

}  // namespace polyoracle::ls
