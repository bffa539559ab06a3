#pragma once

#include <cstdint>

#include "polyoracle/circuits/circuit.hpp"
#include "polyoracle/common/caps.hpp"
#include "polyoracle/polycore/polynomial.hpp"

namespace polyoracle::circuits {

/// Splits every gate into its homogeneous components of degree 0..delta
/// (Add: componentwise, Mul: convolution truncated at delta) and outputs the
/// sum of the output gate's components. Components known to be zero are not
/// materialized, so the result has at most (delta+1)^2 binary gates per
/// original binary gate plus delta additions at the output. The result
/// computes the same polynomial as `c` whenever that polynomial has degree
/// at most delta; otherwise it computes the truncation to degree <= delta.
ArithmeticCircuit homogenize(const ArithmeticCircuit& c, std::uint32_t delta);

/// Expands every gate to a canonical polynomial in topological order.
/// Throws CapExceeded as soon as any gate has more than `monomial_cap`
/// monomials.
poly::SparsePolynomial expand_to_polynomial(const ArithmeticCircuit& c,
                                            std::size_t monomial_cap = kDefaultMonomialCap);

enum class VerifyReason {
  Accepted,
  Mismatch,        // homogenized expansion differs from the target
  DegreeExceeded,  // low-degree part matches but the circuit has higher terms
  CapExceeded,
  ArityMismatch,
};

struct Verdict {
  bool accepted = false;
  VerifyReason reason = VerifyReason::Mismatch;

  explicit operator bool() const { return accepted; }
};

/// Accepts iff the polynomial computed by `c` is identical to `target`.
/// The homogenized circuit is expanded and compared monomial by monomial;
/// when the circuit's formal degree exceeds delta the truncation could hide
/// higher terms, so the raw circuit is expanded as well.
Verdict verify_circuit(const ArithmeticCircuit& c, const poly::SparsePolynomial& target,
                       std::uint32_t delta, std::size_t monomial_cap = kDefaultMonomialCap);

/// Multivariate Horner construction: P = P_0 + x_v (P_1 + x_v (P_2 + ...))
/// for the lowest variable v present, recursively on the coefficients.
ArithmeticCircuit build_circuit(const poly::SparsePolynomial& p);

}  // namespace polyoracle::circuits
