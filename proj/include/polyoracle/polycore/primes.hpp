#pragma once

#include "polyoracle/common/bigint.hpp"

namespace polyoracle {

/// Deterministic primality: trial division up to 10^7, Miller-Rabin with
/// the first thirteen prime bases (exact below 3.3e24) above that, and GMP's
/// Baillie-PSW based test beyond that range.
bool is_prime(const BigInt& n);

}  // namespace polyoracle
