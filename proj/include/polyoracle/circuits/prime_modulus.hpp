#pragma once

#include "polyoracle/common/bigint.hpp"

namespace polyoracle::circuits {

struct PrimeModulus {
  BigInt p;
  BigInt lower;  // 2M
  BigInt upper;  // 4M
};

/// Smallest prime in [2M, 4M] (one exists by Bertrand's postulate).
/// Throws PreconditionViolated for M < 1.
PrimeModulus find_prime(const BigInt& bound);

/// Maps a residue in [0, p) to its representative in (-p/2, p/2].
BigInt centered_residue(const BigInt& residue, const BigInt& p);

}  // namespace polyoracle::circuits
