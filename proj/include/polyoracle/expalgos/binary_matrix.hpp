#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace polyoracle::exp {

/// Subsets of a small ground set as bit masks; bit i is element i (0-based).
using Mask = std::uint32_t;

inline constexpr std::uint32_t kMaxMatrixSize = 30;

/// Square 0/1 matrix read as the bipartite graph G(L, R, E) with
/// (u, v) in E iff a[u][v] = 1. Rows are L, columns are R.
class BinaryMatrix {
 public:
  BinaryMatrix() = default;
  /// Throws TooLarge for n > 30.
  explicit BinaryMatrix(std::uint32_t n);
  /// One mask per row; throws MalformedInput on bits outside [0, n).
  static BinaryMatrix from_rows(std::vector<Mask> rows);
  /// n lines of n characters in {0, 1}; blank lines are ignored.
  static BinaryMatrix parse(std::string_view text);
  static BinaryMatrix identity(std::uint32_t n);
  static BinaryMatrix all_ones(std::uint32_t n);

  std::uint32_t n() const { return n_; }
  bool at(std::uint32_t u, std::uint32_t v) const { return (rows_[u] >> v) & 1u; }
  void set(std::uint32_t u, std::uint32_t v, bool value);
  /// N(u) as a mask over R.
  Mask neighbors(std::uint32_t u) const { return rows_[u]; }
  Mask all() const { return n_ == 32 ? ~Mask{0} : (Mask{1} << n_) - 1; }
  std::string to_text() const;

  bool operator==(const BinaryMatrix&) const = default;

 private:
  std::uint32_t n_ = 0;
  std::vector<Mask> rows_;
};

}  // namespace polyoracle::exp
