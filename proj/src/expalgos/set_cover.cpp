#include "polyoracle/expalgos/set_cover.hpp"

#include <bit>

#include "polyoracle/common/error.hpp"
#include "polyoracle/expalgos/set_partition.hpp"

namespace polyoracle::exp {

namespace {

Mask prefix(std::uint32_t m) { return m >= 32 ? ~Mask{0} : (Mask{1} << m) - 1; }

}  // namespace

SetFamily hcv_expand_setcover(const SetFamily& f, std::uint32_t m) {
  validate(f);
  if (m > f.n) throw Error(ErrorKind::PreconditionViolated, "m must not exceed n");
  SetFamily out{f.n, {}};
  for (Mask s : f.sets) {
    const Mask low = s & prefix(m);
    if (std::popcount(low) > 20) throw Error(ErrorKind::TooLarge, "set meets [m] in more than 20 elements");
    // Submasks of `low` in increasing order.
    for (Mask t = 0;; t = (t - low) & low) {
      out.sets.push_back(s & ~t);
      if (t == low) break;
    }
  }
  return out;
}

std::vector<SignedFamily> hcv_branch(const SetFamily& f, std::uint32_t m) {
  validate(f);
  if (m > f.n) throw Error(ErrorKind::PreconditionViolated, "m must not exceed n");
  if (f.n - m > 20) throw Error(ErrorKind::TooLarge, "more than 20 branchings");
  std::vector<SignedFamily> terms{{1, f}};
  for (std::uint32_t e = f.n; e > m; --e) {
    const Mask bit = Mask{1} << (e - 1);
    std::vector<SignedFamily> next;
    next.reserve(terms.size() * 2);
    for (const auto& t : terms) {
      SignedFamily dropped{t.sign, {e - 1, {}}};
      SignedFamily avoided{-t.sign, {e - 1, {}}};
      for (Mask s : t.family.sets) {
        dropped.family.sets.push_back(s & ~bit);
        if (!(s & bit)) avoided.family.sets.push_back(s);
      }
      next.push_back(std::move(dropped));
      next.push_back(std::move(avoided));
    }
    terms = std::move(next);
  }
  return terms;
}

BigInt hcv_brute(const SetFamily& f, std::uint32_t m, std::uint32_t k) {
  validate(f);
  if (f.sets.size() > 18) throw Error(ErrorKind::TooLarge, "brute #HCV limited to 18 sets");
  const auto count = static_cast<std::uint32_t>(f.sets.size());
  const Mask exact = prefix(m);
  BigInt total = 0;
  for (std::uint32_t pick = 0; pick < (1u << count); ++pick) {
    if (static_cast<std::uint32_t>(std::popcount(pick)) != k) continue;
    Mask covered = 0, twice = 0;
    for (std::uint32_t i = 0; i < count; ++i) {
      if (!((pick >> i) & 1u)) continue;
      twice |= covered & f.sets[i];
      covered |= f.sets[i];
    }
    if (covered == f.universe() && (twice & exact) == 0) total += 1;
  }
  return total;
}

BigInt hcv_via_traces(const SetFamily& f, std::uint32_t m, std::uint32_t k, std::uint32_t theta) {
  BigInt total = 0;
  for (const auto& t : hcv_branch(f, m)) total += t.sign * setpartition_via_traces(t.family, k, theta);
  return total;
}

std::uint32_t reduction_split(const SetFamily& f, std::uint32_t theta) {
  validate(f);
  for (std::uint32_t m = f.n;; --m) {
    bool fits = true;
    for (Mask s : f.sets) {
      fits = fits && 2 * theta * static_cast<std::uint32_t>(std::popcount(s & prefix(m))) <= m;
    }
    if (fits || m == 0) return m;
  }
}

std::optional<std::uint32_t> setcover_min(const SetFamily& f, CoverMethod method, std::uint32_t theta) {
  validate(f);
  const auto count = static_cast<std::uint32_t>(f.sets.size());
  if (method == CoverMethod::Brute) {
    if (count > 20) throw Error(ErrorKind::TooLarge, "brute set cover limited to 20 sets");
    std::optional<std::uint32_t> best;
    for (std::uint32_t pick = 0; pick < (1u << count); ++pick) {
      Mask covered = 0;
      for (std::uint32_t i = 0; i < count; ++i) {
        if ((pick >> i) & 1u) covered |= f.sets[i];
      }
      const auto size = static_cast<std::uint32_t>(std::popcount(pick));
      if (covered == f.universe() && (!best || size < *best)) best = size;
    }
    return best;
  }
  const std::uint32_t m = reduction_split(f, theta);
  const SetFamily expanded = hcv_expand_setcover(f, m);
  const auto branches = hcv_branch(expanded, m);
  for (std::uint32_t k = f.n == 0 ? 0 : 1; k <= count; ++k) {
    BigInt total = 0;
    for (const auto& t : branches) total += t.sign * setpartition_via_traces(t.family, k, theta);
    if (total < 0) throw Error(ErrorKind::PreconditionViolated, "negative #HCV count");
    if (total > 0) return k;
  }
  return std::nullopt;
}

}  // namespace polyoracle::exp
