#pragma once

// Set Cover through #HCV_{n,m,k}: sub-collections of k sets covering [n]
// with every element of [m] covered exactly once.

#include <cstdint>
#include <optional>
#include <vector>

#include "polyoracle/common/bigint.hpp"
#include "polyoracle/expalgos/set_family.hpp"

namespace polyoracle::exp {

/// Replaces every set S by the sets S \ T for T ⊆ S ∩ [m], T in increasing
/// mask order. Throws TooLarge when some |S ∩ [m]| > 20.
SetFamily hcv_expand_setcover(const SetFamily& f, std::uint32_t m);

struct SignedFamily {
  int sign = 1;
  SetFamily family;  // over [m]
};

/// Branches on elements n, n-1, ..., m+1: dropping the element from every
/// set (+) or discarding the sets that hold it (-). Yields 2^(n-m) set
/// partition instances over [m]. Throws TooLarge for n - m > 20.
std::vector<SignedFamily> hcv_branch(const SetFamily& f, std::uint32_t m);

/// Direct count over k-index subsets. Throws TooLarge for more than 18 sets.
BigInt hcv_brute(const SetFamily& f, std::uint32_t m, std::uint32_t k);

/// Signed sum of setpartition_via_traces over hcv_branch.
BigInt hcv_via_traces(const SetFamily& f, std::uint32_t m, std::uint32_t k, std::uint32_t theta);

enum class CoverMethod { Brute, Reduction };

/// The largest m <= n with every |S ∩ [m]| <= floor(m / (2 theta)), so that
/// the set partition instances meet their size precondition.
std::uint32_t reduction_split(const SetFamily& f, std::uint32_t theta);

/// Minimum number of sets covering [n], or nullopt. The reduction tests
/// k = 1, 2, ... via hcv_expand, hcv_branch and the trace sum.
std::optional<std::uint32_t> setcover_min(const SetFamily& f, CoverMethod method, std::uint32_t theta = 1);

}  // namespace polyoracle::exp
