#pragma once

#include <cstdint>
#include <functional>

#include "polyoracle/common/bigint.hpp"
#include "polyoracle/lsframe/assignment.hpp"
#include "polyoracle/lsframe/ls_problem.hpp"

namespace polyoracle::ls {

inline constexpr std::uint64_t kBruteUniverseCap = 1'000'000;

/// Direct search over S^alpha x (U_n \ S)^beta. Throws UniverseTooLarge
/// when n^r > 10^6.
bool brute_solve(const LSProblemSpec& spec, const LSInstance& inst);

/// Answers one query: the polynomial of size point.size() at `point`.
using Oracle = std::function<BigInt(const BlockAssignment&)>;

/// Evaluates the problem's polynomial family at whatever point it is given.
Oracle formulation_oracle(const LSProblemSpec& spec);

/// Builds phi(inst), asks the oracle once and reports value != 0.
bool solve_via_oracle(const LSProblemSpec& spec, const LSInstance& inst, std::uint32_t theta,
                      const Oracle& oracle);

}  // namespace polyoracle::ls
