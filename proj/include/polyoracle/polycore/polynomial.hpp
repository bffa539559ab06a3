#pragma once

// Canonical sparse multivariate polynomials over Z, evaluated exactly or
// modulo a prime.

#include <cstdint>
#include <span>
#include <vector>

#include "polyoracle/common/bigint.hpp"

namespace polyoracle::poly {

using VarIndex = std::uint32_t;

struct Power {
  VarIndex var = 0;
  std::uint32_t exp = 1;

  bool operator==(const Power&) const = default;
};

/// coeff * prod x_var^exp. In canonical form powers are strictly increasing
/// in `var`, every exponent is >= 1 and the coefficient is nonzero.
struct Monomial {
  BigInt coeff;
  std::vector<Power> powers;

  std::uint64_t total_degree() const;
  bool operator==(const Monomial&) const = default;
};

/// Graded lexicographic order on exponent vectors: lower total degree first,
/// then lexicographic with x0 as the most significant variable. Returns <0,
/// 0 or >0. Both arguments must be canonical power lists.
int compare_powers(std::span<const Power> a, std::span<const Power> b);

/// Sorts and merges a power list (repeated variables have exponents added).
std::vector<Power> normalize_powers(std::vector<Power> powers);

class SparsePolynomial {
 public:
  SparsePolynomial() = default;
  explicit SparsePolynomial(std::size_t num_vars) : num_vars_(num_vars) {}

  /// Canonicalizes: normalizes power lists, merges like terms, drops zeros
  /// and sorts in graded lexicographic order. Throws ArityMismatch when a
  /// variable index is >= num_vars.
  SparsePolynomial(std::size_t num_vars, std::vector<Monomial> terms);

  static SparsePolynomial constant(std::size_t num_vars, const BigInt& value);
  static SparsePolynomial variable(std::size_t num_vars, VarIndex var);

  std::size_t num_vars() const { return num_vars_; }
  const std::vector<Monomial>& monomials() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  bool operator==(const SparsePolynomial&) const = default;

 private:
  std::size_t num_vars_ = 0;
  std::vector<Monomial> terms_;
};

SparsePolynomial add(const SparsePolynomial& p, const SparsePolynomial& q);
SparsePolynomial subtract(const SparsePolynomial& p, const SparsePolynomial& q);
SparsePolynomial multiply(const SparsePolynomial& p, const SparsePolynomial& q);
SparsePolynomial negate(const SparsePolynomial& p);

/// Maximum monomial degree; 0 for the zero polynomial.
std::uint64_t total_degree(const SparsePolynomial& p);

BigInt eval_over_integers(const SparsePolynomial& p, std::span<const BigInt> x);

/// Result in [0, p). Throws NotPrime when `prime` fails the primality test.
BigInt eval_mod(const SparsePolynomial& p, std::span<const BigInt> x, const BigInt& prime);

/// M = 1 + sum |c| * rho^deg over monomials; |P(x)| < M whenever every
/// |x_i| <= rho.
BigInt value_bound(const SparsePolynomial& p, const BigInt& rho);

struct ExplicitFamilyParams {
  std::uint64_t delta = 1;
  BigInt coeff_scale = 1;
};

/// Degree <= delta and every |coefficient| <= coeff_scale * n^delta.
bool check_explicit(const SparsePolynomial& p, const ExplicitFamilyParams& params,
                    std::uint64_t n);

}  // namespace polyoracle::poly
