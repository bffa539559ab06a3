#pragma once

#include <json.hpp>

#include <cstdint>
#include <vector>

#include "polyoracle/common/bigint.hpp"
#include "polyoracle/expalgos/binary_matrix.hpp"

namespace polyoracle::exp {

/// Sets over [n] (element e is bit e-1). Entries are told apart by index,
/// so repeated sets count separately.
struct SetFamily {
  std::uint32_t n = 0;
  std::vector<Mask> sets;

  Mask universe() const { return n == 32 ? ~Mask{0} : (Mask{1} << n) - 1; }
  std::size_t empty_count() const;
  /// Number of entries equal to `s`.
  std::size_t count_equal(Mask s) const;

  bool operator==(const SetFamily&) const = default;
};

inline constexpr std::uint32_t kMaxUniverse = 30;

/// {"n": N, "sets": [[elements...], ...]} with 1-based elements.
SetFamily family_from_json(const nlohmann::json& j);
nlohmann::json to_json(const SetFamily& f);

/// Throws MalformedInput when a set leaves [n] and TooLarge for n > 30.
void validate(const SetFamily& f);

/// Number of k-element index subsets whose sets are pairwise disjoint with
/// union [n]. Throws TooLarge for more than 20 sets.
BigInt setpartition_brute(const SetFamily& f, std::uint32_t k);

/// Number of k'-element index subsets partitioning A whose every set has
/// its minimum below min(B). Throws PreconditionViolated for empty B and
/// TooLarge for |A| > 20.
BigInt z_var_dp(const SetFamily& f, Mask a, Mask b, std::uint32_t k);

/// As z_var_dp with the minimum bound given directly as an element index
/// (0-based); pass 32 for no bound.
BigInt partitions_below(const SetFamily& f, Mask a, std::uint32_t bound, std::uint32_t k);

}  // namespace polyoracle::exp
