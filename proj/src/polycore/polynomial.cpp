#include "polyoracle/polycore/polynomial.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "polyoracle/common/error.hpp"
#include "polyoracle/polycore/primes.hpp"

namespace polyoracle::poly {

std::uint64_t Monomial::total_degree() const {
  std::uint64_t d = 0;
  for (const auto& pw : powers) d += pw.exp;
  return d;
}

namespace {

std::uint64_t degree_of(std::span<const Power> powers) {
  std::uint64_t d = 0;
  for (const auto& pw : powers) d += pw.exp;
  return d;
}

struct PowersLess {
  bool operator()(const std::vector<Power>& a, const std::vector<Power>& b) const {
    return compare_powers(a, b) < 0;
  }
};

using TermMap = std::map<std::vector<Power>, BigInt, PowersLess>;

std::vector<Monomial> drain(TermMap& terms) {
  std::vector<Monomial> out;
  out.reserve(terms.size());
  for (auto& [powers, coeff] : terms) {
    if (sgn(coeff) != 0) out.push_back(Monomial{std::move(coeff), powers});
  }
  return out;
}

void require_same_arity(const SparsePolynomial& p, const SparsePolynomial& q) {
  if (p.num_vars() != q.num_vars()) {
    throw Error(ErrorKind::ArityMismatch, "polynomials over " + std::to_string(p.num_vars()) +
                                              " and " + std::to_string(q.num_vars()) +
                                              " variables");
  }
}

}  // namespace

int compare_powers(std::span<const Power> a, std::span<const Power> b) {
  const auto da = degree_of(a);
  const auto db = degree_of(b);
  if (da != db) return da < db ? -1 : 1;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].var == b[j].var) {
      if (a[i].exp != b[j].exp) return a[i].exp < b[j].exp ? -1 : 1;
      ++i;
      ++j;
    } else if (a[i].var < b[j].var) {
      // a has a positive exponent where b has zero.
      return 1;
    } else {
      return -1;
    }
  }
  if (i < a.size()) return 1;
  if (j < b.size()) return -1;
  return 0;
}

std::vector<Power> normalize_powers(std::vector<Power> powers) {
  std::sort(powers.begin(), powers.end(),
            [](const Power& x, const Power& y) { return x.var < y.var; });
  std::vector<Power> out;
  out.reserve(powers.size());
  for (const auto& pw : powers) {
    if (pw.exp == 0) continue;
    if (!out.empty() && out.back().var == pw.var) {
      out.back().exp += pw.exp;
    } else {
      out.push_back(pw);
    }
  }
  return out;
}

SparsePolynomial::SparsePolynomial(std::size_t num_vars, std::vector<Monomial> terms)
    : num_vars_(num_vars) {
  TermMap merged;
  for (auto& t : terms) {
    if (sgn(t.coeff) == 0) continue;
    auto powers = normalize_powers(std::move(t.powers));
    if (!powers.empty() && powers.back().var >= num_vars) {
      throw Error(ErrorKind::ArityMismatch,
                  "variable x" + std::to_string(powers.back().var) + " outside " +
                      std::to_string(num_vars) + " variables");
    }
    merged[std::move(powers)] += t.coeff;
  }
  terms_ = drain(merged);
}

SparsePolynomial SparsePolynomial::constant(std::size_t num_vars, const BigInt& value) {
  return SparsePolynomial(num_vars, {Monomial{value, {}}});
}

SparsePolynomial SparsePolynomial::variable(std::size_t num_vars, VarIndex var) {
  return SparsePolynomial(num_vars, {Monomial{1, {Power{var, 1}}}});
}

SparsePolynomial add(const SparsePolynomial& p, const SparsePolynomial& q) {
  require_same_arity(p, q);
  // Both inputs are sorted, so a single merge pass suffices.
  std::vector<Monomial> out;
  out.reserve(p.size() + q.size());
  const auto& a = p.monomials();
  const auto& b = q.monomials();
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    int c = (i == a.size()) ? 1 : (j == b.size()) ? -1 : compare_powers(a[i].powers, b[j].powers);
    if (c < 0) {
      out.push_back(a[i++]);
    } else if (c > 0) {
      out.push_back(b[j++]);
    } else {
      BigInt sum = a[i].coeff + b[j].coeff;
      if (sgn(sum) != 0) out.push_back(Monomial{std::move(sum), a[i].powers});
      ++i;
      ++j;
    }
  }
  return SparsePolynomial(p.num_vars(), std::move(out));
}

SparsePolynomial negate(const SparsePolynomial& p) {
  std::vector<Monomial> out = p.monomials();
  for (auto& m : out) m.coeff = -m.coeff;
  return SparsePolynomial(p.num_vars(), std::move(out));
}

SparsePolynomial subtract(const SparsePolynomial& p, const SparsePolynomial& q) {
  return add(p, negate(q));
}

SparsePolynomial multiply(const SparsePolynomial& p, const SparsePolynomial& q) {
  require_same_arity(p, q);
  TermMap terms;
  std::vector<Power> buf;
  for (const auto& a : p.monomials()) {
    for (const auto& b : q.monomials()) {
      buf.clear();
      std::size_t i = 0;
      std::size_t j = 0;
      while (i < a.powers.size() || j < b.powers.size()) {
        if (j == b.powers.size() || (i < a.powers.size() && a.powers[i].var < b.powers[j].var)) {
          buf.push_back(a.powers[i++]);
        } else if (i == a.powers.size() || b.powers[j].var < a.powers[i].var) {
          buf.push_back(b.powers[j++]);
        } else {
          buf.push_back(Power{a.powers[i].var, a.powers[i].exp + b.powers[j].exp});
          ++i;
          ++j;
        }
      }
      terms[buf] += a.coeff * b.coeff;
    }
  }
  return SparsePolynomial(p.num_vars(), drain(terms));
}

std::uint64_t total_degree(const SparsePolynomial& p) {
  std::uint64_t d = 0;
  for (const auto& m : p.monomials()) d = std::max(d, m.total_degree());
  return d;
}

namespace {

void require_arity(const SparsePolynomial& p, std::span<const BigInt> x) {
  if (x.size() != p.num_vars()) {
    throw Error(ErrorKind::ArityMismatch, "point has " + std::to_string(x.size()) +
                                              " coordinates, polynomial has " +
                                              std::to_string(p.num_vars()) + " variables");
  }
}

}  // namespace

BigInt eval_over_integers(const SparsePolynomial& p, std::span<const BigInt> x) {
  require_arity(p, x);
  BigInt total = 0;
  BigInt term;
  BigInt power;
  for (const auto& m : p.monomials()) {
    term = m.coeff;
    for (const auto& pw : m.powers) {
      mpz_pow_ui(power.get_mpz_t(), x[pw.var].get_mpz_t(), pw.exp);
      term *= power;
    }
    total += term;
  }
  return total;
}

BigInt eval_mod(const SparsePolynomial& p, std::span<const BigInt> x, const BigInt& prime) {
  require_arity(p, x);
  if (!is_prime(prime)) {
    throw Error(ErrorKind::NotPrime, to_decimal(prime) + " is not prime");
  }
  BigInt total = 0;
  BigInt term;
  BigInt power;
  BigInt base;
  for (const auto& m : p.monomials()) {
    mpz_mod(term.get_mpz_t(), m.coeff.get_mpz_t(), prime.get_mpz_t());
    for (const auto& pw : m.powers) {
      mpz_mod(base.get_mpz_t(), x[pw.var].get_mpz_t(), prime.get_mpz_t());
      mpz_powm_ui(power.get_mpz_t(), base.get_mpz_t(), pw.exp, prime.get_mpz_t());
      term *= power;
      mpz_mod(term.get_mpz_t(), term.get_mpz_t(), prime.get_mpz_t());
    }
    total += term;
  }
  mpz_mod(total.get_mpz_t(), total.get_mpz_t(), prime.get_mpz_t());
  return total;
}

BigInt value_bound(const SparsePolynomial& p, const BigInt& rho) {
  BigInt bound = 1;
  for (const auto& m : p.monomials()) {
    bound += abs(m.coeff) * pow(rho, m.total_degree());
  }
  return bound;
}

bool check_explicit(const SparsePolynomial& p, const ExplicitFamilyParams& params,
                    std::uint64_t n) {
  if (total_degree(p) > params.delta) return false;
  const BigInt limit = params.coeff_scale * pow(BigInt(static_cast<unsigned long>(n)), params.delta);
  return std::all_of(p.monomials().begin(), p.monomials().end(),
                     [&](const Monomial& m) { return abs(m.coeff) <= limit; });
}

}  // namespace polyoracle::poly
