#pragma once

// The LS polynomial at instance size s:
//   sum over (a, b) in [1, s^r]^(alpha+beta) with V(a, b) = 1,
//   i in [1, s]^alpha, j in [0, s-1]^beta of
//   prod P^=_{i_l, a_l} * prod P^<_{j_l, b_l} P^>_{j_l + 1, b_l},
// with P^c_{i,a} = sum over tuples in C^c of prod_q x^{c_q}_{i,q,a^q}.

#include <cstdint>
#include <functional>

#include "polyoracle/common/bigint.hpp"
#include "polyoracle/common/caps.hpp"
#include "polyoracle/lsframe/assignment.hpp"
#include "polyoracle/lsframe/ls_problem.hpp"
#include "polyoracle/polycore/polynomial.hpp"

namespace polyoracle::ls {

/// theta * (alpha + 2 beta).
std::uint64_t formulation_degree(const LSProblemSpec& spec, std::uint32_t theta);

struct StreamStats {
  std::uint64_t accepted_tuples = 0;
  std::uint64_t monomials = 0;
};

/// Emits every term of the polynomial (coefficient 1, degree exactly
/// theta*(alpha+2beta)) in a fixed order. Throws StreamTooLarge when the
/// accepted tuples or the term count exceed `cap`, before emitting anything.
StreamStats formulation_monomials(const LSProblemSpec& spec, std::uint64_t s, std::uint32_t theta,
                                  const std::function<void(const poly::Monomial&)>& sink,
                                  std::uint64_t cap = enumeration_cap());

/// The streamed terms summed into canonical form.
poly::SparsePolynomial formulation_polynomial(const LSProblemSpec& spec, std::uint64_t s,
                                              std::uint32_t theta,
                                              std::uint64_t cap = enumeration_cap());

/// Value of the polynomial at phi(inst): the number of tuples accepted by
/// the verifier with every a_l in S and every b_l in [1, n^r] \ S.
/// Throws UniverseTooLarge when beta > 0 and n^r exceeds the enumeration cap.
BigInt evaluate_formulation(const LSProblemSpec& spec, const LSInstance& inst, std::uint32_t theta);

/// P^c_{row,a}(point) summed literally over the tuples of C^c.
BigInt comparison_value(const BlockAssignment& point, const ComparisonSets& sets, Cmp c,
                        std::uint64_t row, std::uint64_t value);

/// Value of the polynomial at an arbitrary point, computed from the point
/// alone by factoring over positions. Throws CapExceeded when the support
/// to scan exceeds `cap`.
BigInt evaluate_at_point(const LSProblemSpec& spec, const BlockAssignment& point,
                         std::uint64_t cap = enumeration_cap());

}  // namespace polyoracle::ls
