#include "polyoracle/polycore/primes.hpp"

#include <array>
#include <cstdint>

namespace polyoracle {

namespace {

constexpr std::uint64_t kTrialDivisionLimit = 10'000'000;

bool trial_division(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

// The first thirteen primes decide every n < 3317044064679887385961981.
constexpr std::array<unsigned long, 13> kWitnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

bool miller_rabin(const BigInt& n) {
  for (unsigned long w : kWitnesses) {
    if (n == w) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), w)) return false;
  }
  BigInt d = n - 1;
  unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
  const BigInt n_minus_1 = n - 1;
  BigInt x;
  for (unsigned long w : kWitnesses) {
    BigInt a = w;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n_minus_1) continue;
    bool composite = true;
    for (unsigned long r = 1; r < s; ++r) {
      mpz_powm_ui(x.get_mpz_t(), x.get_mpz_t(), 2, n.get_mpz_t());
      if (x == n_minus_1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

}  // namespace

bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  if (n <= kTrialDivisionLimit) return trial_division(n.get_ui());
  static const BigInt kMillerRabinExact("3317044064679887385961981", 10);
  if (n < kMillerRabinExact) return miller_rabin(n);
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

}  // namespace polyoracle
