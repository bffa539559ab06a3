#include "polyoracle/circuits/prime_modulus.hpp"

#include "polyoracle/common/error.hpp"
#include "polyoracle/polycore/primes.hpp"

namespace polyoracle::circuits {

PrimeModulus find_prime(const BigInt& bound) {
  if (bound < 1) throw Error(ErrorKind::PreconditionViolated, "prime search needs M >= 1");
  PrimeModulus out{0, 2 * bound, 4 * bound};
  for (BigInt candidate = out.lower; candidate <= out.upper; ++candidate) {
    if (is_prime(candidate)) {
      out.p = candidate;
      return out;
    }
  }
  // Unreachable for M >= 1.
  throw Error(ErrorKind::PreconditionViolated, "no prime in [2M, 4M]");
}

BigInt centered_residue(const BigInt& residue, const BigInt& p) {
  BigInt r;
  mpz_mod(r.get_mpz_t(), residue.get_mpz_t(), p.get_mpz_t());
  if (2 * r > p) r -= p;
  return r;
}

}  // namespace polyoracle::circuits
