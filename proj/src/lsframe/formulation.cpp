#include "polyoracle/lsframe/formulation.hpp"

#include <limits>
#include <map>
#include <string>
#include <vector>

#include "polyoracle/common/error.hpp"

namespace polyoracle::ls {

namespace {

std::uint64_t universe_or_max(std::uint64_t s, std::uint32_t r) {
  try {
    return universe_size(s, r);
  } catch (const Error&) {
    return std::numeric_limits<std::uint64_t>::max();
  }
}

std::vector<Code> iota_codes(std::uint64_t top) {
  std::vector<Code> out(top);
  for (std::uint64_t i = 0; i < top; ++i) out[i] = i + 1;
  return out;
}

// Advances a mixed-radix counter; false once it wraps around.
bool advance(std::vector<std::uint64_t>& digits, const std::vector<std::uint64_t>& radix) {
  for (std::size_t k = digits.size(); k-- > 0;) {
    if (++digits[k] < radix[k]) return true;
    digits[k] = 0;
  }
  return false;
}

}  // namespace

std::uint64_t formulation_degree(const LSProblemSpec& spec, std::uint32_t theta) {
  return std::uint64_t{theta} * (spec.alpha + 2ull * spec.beta);
}

StreamStats formulation_monomials(const LSProblemSpec& spec, std::uint64_t s, std::uint32_t theta,
                                  const std::function<void(const poly::Monomial&)>& sink,
                                  std::uint64_t cap) {
  const Layout layout = Layout::make(s, spec.r, theta);
  if (layout.variable_count() > std::numeric_limits<poly::VarIndex>::max()) {
    throw Error(ErrorKind::StreamTooLarge, "variable space exceeds 32-bit indices");
  }
  const std::uint64_t top = universe_or_max(s, spec.r);
  if (top > cap) {
    throw Error(ErrorKind::StreamTooLarge, "candidate range s^r = " + std::to_string(top) +
                                               " exceeds cap " + std::to_string(cap));
  }
  const auto codes = iota_codes(top);

  const auto sets = comparison_tuple_sets(theta);
  const std::uint32_t alpha = spec.alpha;
  const std::uint32_t beta = spec.beta;
  // Digits: alpha row choices in [1, s], beta row choices in [0, s-1],
  // beta tuples from C^<, beta tuples from C^>.
  std::vector<std::uint64_t> radix;
  for (std::uint32_t l = 0; l < alpha + beta; ++l) radix.push_back(s);
  for (std::uint32_t l = 0; l < beta; ++l) radix.push_back(sets.less.size());
  for (std::uint32_t l = 0; l < beta; ++l) radix.push_back(sets.greater.size());

  std::uint64_t per_tuple = 1;
  for (auto r : radix) per_tuple = saturating_mul(per_tuple, r, cap + 1);

  // Every accepted tuple contributes per_tuple terms, so stop as soon as the total is known to exceed the cap.
  std::vector<std::vector<Code>> accepted;
  enumerate_witnesses(spec, codes, codes, [&](std::span<const Code> t) {
    accepted.emplace_back(t.begin(), t.end());
    if (saturating_mul(per_tuple, accepted.size(), cap + 1) > cap) {
      throw Error(ErrorKind::StreamTooLarge, "stream has more than " + std::to_string(cap) + " terms");
    }
    return true;
  });


  StreamStats stats{accepted.size(), 0};
  std::vector<poly::Power> powers;
  for (const auto& tuple : accepted) {
    std::vector<std::uint64_t> digits(radix.size(), 0);
    do {
      powers.clear();
      const auto put = [&](Cmp c, std::uint64_t row, std::uint32_t q, Code code) {
        const auto a = block_of(code - 1, q, theta, layout.block_len);
        powers.push_back(poly::Power{static_cast<poly::VarIndex>(layout.index(c, row, q, a)), 1});
      };
      for (std::uint32_t l = 0; l < alpha; ++l) {
        const std::uint64_t i = digits[l] + 1;
        for (std::uint32_t q = 1; q <= theta; ++q) put(Cmp::Equal, i, q, tuple[l]);
      }
      for (std::uint32_t l = 0; l < beta; ++l) {
        const std::uint64_t j = digits[alpha + l];
        const auto& lt = sets.less[digits[alpha + beta + l]];
        const auto& gt = sets.greater[digits[alpha + 2 * beta + l]];
        for (std::uint32_t q = 1; q <= theta; ++q) {
          put(lt[q - 1], j, q, tuple[alpha + l]);
          put(gt[q - 1], j + 1, q, tuple[alpha + l]);
        }
      }
      sink(poly::Monomial{1, poly::normalize_powers(powers)});
      ++stats.monomials;
    } while (advance(digits, radix));
  }
  return stats;
}

poly::SparsePolynomial formulation_polynomial(const LSProblemSpec& spec, std::uint64_t s,
                                              std::uint32_t theta, std::uint64_t cap) {
  std::vector<poly::Monomial> terms;
  formulation_monomials(spec, s, theta, [&](const poly::Monomial& m) { terms.push_back(m); }, cap);
  return poly::SparsePolynomial(variable_count(s, spec.r, theta), std::move(terms));
}

BigInt evaluate_formulation(const LSProblemSpec& spec, const LSInstance& inst, std::uint32_t theta) {
  (void)Layout::make(inst.size(), spec.r, theta);
  if (inst.r() != spec.r) throw Error(ErrorKind::ArityMismatch, "instance and problem disagree on r");
  std::vector<Code> outside;
  if (spec.beta > 0) {
    const std::uint64_t top = inst.universe();
    if (top > enumeration_cap()) {
      throw Error(ErrorKind::UniverseTooLarge, "n^r = " + std::to_string(top) + " above the cap");
    }
    outside.reserve(top - inst.m());
    for (Code c = 1; c <= top; ++c) {
      if (!inst.contains(c)) outside.push_back(c);
    }
  }
  BigInt count = 0;
  enumerate_witnesses(spec, inst.elements(), outside, [&](std::span<const Code>) {
    ++count;
    return true;
  });
  return count;
}

BigInt comparison_value(const BlockAssignment& point, const ComparisonSets& sets, Cmp c,
                        std::uint64_t row, std::uint64_t value) {
  const auto& layout = point.layout();
  BigInt total = 0;
  for (const auto& tuple : sets.of(c)) {
    BigInt term = 1;
    for (std::uint32_t q = 1; q <= layout.theta && sgn(term) != 0; ++q) {
      term *= point.at(tuple[q - 1], row, q, block_of(value, q, layout.theta, layout.block_len));
    }
    total += term;
  }
  return total;
}

namespace {

// P^< and P^> through the disjoint decomposition by first non-'=' block:
// sum_q [prod_{q'<q} x^=] * x^c_q * prod_{q'>q} (x^< + x^= + x^>).
BigInt strict_value(const BlockAssignment& point, Cmp c, std::uint64_t row, std::uint64_t value) {
  const auto& layout = point.layout();
  const std::uint32_t theta = layout.theta;
  BigInt total = 0;
  BigInt prefix = 1;
  for (std::uint32_t q = 1; q <= theta; ++q) {
    const auto a = block_of(value, q, theta, layout.block_len);
    if (const BigInt* hit = point.find(c, row, q, a)) {
      BigInt term = prefix * *hit;
      for (std::uint32_t k = q + 1; k <= theta && sgn(term) != 0; ++k) {
        const auto b = block_of(value, k, theta, layout.block_len);
        BigInt any = 0;
        for (Cmp d : {Cmp::Less, Cmp::Equal, Cmp::Greater}) {
          if (const BigInt* v = point.find(d, row, k, b)) any += *v;
        }
        term *= any;
      }
      total += term;
    }
    const BigInt* eq = point.find(Cmp::Equal, row, q, a);
    if (!eq) break;
    prefix *= *eq;
  }
  return total;
}

}  // namespace

BigInt evaluate_at_point(const LSProblemSpec& spec, const BlockAssignment& point, std::uint64_t cap) {
  const Layout& layout = point.layout();
  const std::uint64_t s = layout.s;
  const std::uint32_t theta = layout.theta;
  const std::uint32_t L = layout.block_len;
  if (layout.r != spec.r) throw Error(ErrorKind::ArityMismatch, "point built for another r");
  const std::uint64_t top = universe_or_max(s, spec.r);

  // E(a) = sum_{i in [1,s]} prod_q x^=_{i,q,a^q}, over the support of the rows.
  std::map<Code, BigInt> in_weight;
  std::uint64_t scanned = 0;
  for (std::uint64_t i = 1; i <= s; ++i) {
    std::vector<std::pair<std::uint64_t, BigInt>> partial{{0, 1}};
    for (std::uint32_t q = 1; q <= theta && !partial.empty(); ++q) {
      const std::uint64_t shift = std::uint64_t{L} * (theta - q);
      std::vector<std::pair<std::uint64_t, BigInt>> next;
      for (const auto& run : point.line(Cmp::Equal, i, q)) {
        for (std::uint64_t a = run.begin; a < run.end; ++a) {
          if (shift >= 64 && a != 0) continue;
          for (const auto& [v, w] : partial) {
            if (++scanned > cap) throw Error(ErrorKind::CapExceeded, "equality support above cap");
            next.emplace_back(shift >= 64 ? v : v | (a << shift), w * run.value);
          }
        }
      }
      partial = std::move(next);
    }
    for (const auto& [v, w] : partial) {
      if (v >= top) continue;
      in_weight[v + 1] += w;
    }
  }

  // N(b) = sum_{j in [0, s-1]} P^<_{j,b} P^>_{j+1,b}.
  std::map<Code, BigInt> out_weight;
  if (spec.beta > 0) {
    if (top > cap || saturating_mul(top, s) > cap * 8) {
      throw Error(ErrorKind::CapExceeded, "candidate range s^r too large for point evaluation");
    }
    std::vector<bool> active(s + 1);
    for (std::uint64_t j = 0; j <= s; ++j) active[j] = point.row_active(j);
    for (Code b = 1; b <= top; ++b) {
      BigInt total = 0;
      for (std::uint64_t j = 0; j < s; ++j) {
        if (!active[j] || !active[j + 1]) continue;
        BigInt below = strict_value(point, Cmp::Less, j, b - 1);
        if (sgn(below) == 0) continue;
        total += below * strict_value(point, Cmp::Greater, j + 1, b - 1);
      }
      if (sgn(total) != 0) out_weight[b] = std::move(total);
    }
  }

  std::vector<Code> in_codes, out_codes;
  for (const auto& [c, w] : in_weight) {
    if (sgn(w) != 0) in_codes.push_back(c);
  }
  for (const auto& [c, w] : out_weight) out_codes.push_back(c);

  BigInt value = 0;
  enumerate_witnesses(spec, in_codes, out_codes, [&](std::span<const Code> t) {
    BigInt term = 1;
    for (std::uint32_t l = 0; l < spec.alpha; ++l) term *= in_weight.at(t[l]);
    for (std::uint32_t l = spec.alpha; l < spec.arity(); ++l) term *= out_weight.at(t[l]);
    value += term;
    return true;
  });
  return value;
}

}  // namespace polyoracle::ls
