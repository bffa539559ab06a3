#pragma once

// Binary permanent through the F-set identities: the permanent equals a
// signed sum of |F(S1, S0_i, {})| over 2^(n - |S1|) sets S0_i, and each of
// those splits into traces whose counts are products of G variables.
// Rows of the matrix are L and columns are R, both 0-based.

#include <cstdint>
#include <functional>
#include <vector>

#include "polyoracle/common/bigint.hpp"
#include "polyoracle/expalgos/binary_matrix.hpp"

namespace polyoracle::exp {

/// Coverage constraints on R: exactly once, never, at least once.
struct FSpec {
  Mask eq1 = 0;
  Mask eq0 = 0;
  Mask ge1 = 0;

  bool operator==(const FSpec&) const = default;
};

/// By permutation enumeration; throws TooLarge for n > 10.
BigInt permanent_brute(const BinaryMatrix& a);

/// Edge-respecting mappings L -> R meeting the constraints, by direct
/// enumeration. Throws TooLarge for n > 6, PreconditionViolated when the
/// three sets overlap.
BigInt f_count_brute(const BinaryMatrix& a, const FSpec& spec);

struct SignedFSpec {
  int sign = 1;
  FSpec spec;
};

/// Starts from F(S1, {}, R \ S1) (the perfect matchings) and removes every
/// at-least-once target, doubling the terms each time. Throws
/// PreconditionViolated unless |S1| = ceil(alpha * n).
std::vector<SignedFSpec> f_expand(const BinaryMatrix& a, Mask eq1, double alpha);

/// ceil(alpha * n), clamped to [0, n].
std::uint32_t eq1_size(std::uint32_t n, double alpha);

/// |G_K(S1, S0, f)|: mappings K -> R along edges covering S1 exactly once,
/// avoiding S0, and when f is set sending the largest vertex of K into S1.
/// Throws TooLarge for |S1| > 20.
BigInt g_count_dp(const BinaryMatrix& a, Mask k, Mask eq1, Mask eq0, bool f);

/// Breakpoints p_1 < ... < p_c (1-based prefix lengths of L) and the block
/// (0-based) of each S1 element in increasing element order.
struct Trace {
  std::vector<std::uint32_t> breakpoints;
  std::vector<std::uint32_t> block_of;

  bool operator==(const Trace&) const = default;
  auto operator<=>(const Trace&) const = default;
};

/// Preimage quota per block: the first blocks take ceil(|S1| / theta), the
/// last one the rest. When that leaves fewer than theta nonempty quotas the
/// trace uses fewer breakpoints.
struct TraceShape {
  std::uint32_t quota = 0;
  std::uint32_t cuts = 0;
  std::uint32_t last = 0;
};
TraceShape trace_shape(std::uint32_t eq1_count, std::uint32_t theta);

/// The trace of a mapping given as target[u] for every u in L; the mapping
/// must cover each S1 element exactly once.
Trace trace_of(const BinaryMatrix& a, Mask eq1, std::uint32_t theta, const std::vector<std::uint32_t>& target);

struct TraceStats {
  std::uint64_t traces = 0;     // monomials
  std::uint64_t variables = 0;  // distinct G variables evaluated
  std::uint64_t max_factors = 0;
};

/// Calls visit(trace, count) for every trace, count being the product of
/// its G variables.
void for_each_trace(const BinaryMatrix& a, Mask eq1, Mask eq0, std::uint32_t theta,
                    const std::function<void(const Trace&, const BigInt&)>& visit,
                    TraceStats* stats = nullptr);

/// |F(S1, S0, {})| as the sum over traces. Throws TooLarge when the quota
/// exceeds 12.
BigInt f_count_traces(const BinaryMatrix& a, Mask eq1, Mask eq0, std::uint32_t theta,
                      TraceStats* stats = nullptr);

/// S1 = the first ceil(alpha n) columns; f_expand, then the trace sum per
/// term. Throws TooLarge for n > 10.
BigInt permanent_via_formulation(const BinaryMatrix& a, double alpha, std::uint32_t theta,
                                 TraceStats* stats = nullptr);

/// The same expansion with each term counted by g_count_dp over all of L.
BigInt permanent_via_fsets(const BinaryMatrix& a, double alpha);

}  // namespace polyoracle::exp
