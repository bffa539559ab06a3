#pragma once

// #Set Partition by decomposition. Sort the nonempty sets of a solution by
// minimum element and group them greedily: a group's A part collects sets
// while its size stays <= n/theta and its B part is the set that pushes it
// past n/theta. If the sets run out first, the last group is A alone.
// Each solution lies in exactly one decomposition, and a decomposition with
// set counts k_j contributes
//   x_{k - sum k_j} * prod_j y_{B_j} * z_{A_j, B_j, k_j - 1}
// (the final B-less group contributes z with no bound and k_j sets).

#include <cstdint>
#include <functional>
#include <vector>

#include "polyoracle/common/bigint.hpp"
#include "polyoracle/expalgos/set_family.hpp"

namespace polyoracle::exp {

struct PartitionGroup {
  Mask a = 0;
  Mask b = 0;  // 0 only for a final group
  std::uint32_t sets = 0;  // k_j: sets in A plus one for B

  bool operator==(const PartitionGroup&) const = default;
  auto operator<=>(const PartitionGroup&) const = default;
};

struct PartitionTerm {
  std::vector<PartitionGroup> groups;
  std::uint32_t empties = 0;  // k - sum k_j

  bool operator==(const PartitionTerm&) const = default;
  auto operator<=>(const PartitionTerm&) const = default;
};

/// Monomials whose value is zero are pruned as soon as a factor vanishes
/// and are not counted.
struct PartitionStats {
  std::uint64_t terms = 0;
  std::uint64_t max_degree = 0;  // factors in the largest monomial
};

/// Throws PreconditionViolated when a nonempty set exceeds floor(n / (2 theta))
/// or theta is outside {1, 2, 3}, TooLarge for n > 12.
void check_partition_preconditions(const SetFamily& f, std::uint32_t theta);

/// Calls visit(term, value) for every monomial with a nonzero value.
void for_each_partition_term(const SetFamily& f, std::uint32_t k, std::uint32_t theta,
                             const std::function<void(const PartitionTerm&, const BigInt&)>& visit,
                             PartitionStats* stats = nullptr);

/// The decomposition of the solution given by its set indices.
PartitionTerm partition_term_of(const SetFamily& f, const std::vector<std::uint32_t>& indices,
                                std::uint32_t theta);

BigInt setpartition_via_traces(const SetFamily& f, std::uint32_t k, std::uint32_t theta,
                               PartitionStats* stats = nullptr);

}  // namespace polyoracle::exp
