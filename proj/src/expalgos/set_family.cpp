#include "polyoracle/expalgos/set_family.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "polyoracle/common/error.hpp"

namespace polyoracle::exp {

std::size_t SetFamily::empty_count() const { return count_equal(0); }

std::size_t SetFamily::count_equal(Mask s) const {
  return static_cast<std::size_t>(std::count(sets.begin(), sets.end(), s));
}

void validate(const SetFamily& f) {
  if (f.n > kMaxUniverse) throw Error(ErrorKind::TooLarge, "universe above 30 elements");
  for (Mask s : f.sets) {
    if (s & ~f.universe()) throw Error(ErrorKind::MalformedInput, "set leaves the universe");
  }
}

SetFamily family_from_json(const nlohmann::json& j) {
  try {
    SetFamily f;
    f.n = j.at("n").get<std::uint32_t>();
    if (f.n > kMaxUniverse) throw Error(ErrorKind::TooLarge, "universe above 30 elements");
    for (const auto& js : j.at("sets")) {
      Mask s = 0;
      for (const auto& e : js) {
        const auto x = e.get<std::int64_t>();
        if (x < 1 || x > f.n) throw Error(ErrorKind::MalformedInput, "element outside [1, n]");
        s |= Mask{1} << (x - 1);
      }
      f.sets.push_back(s);
    }
    return f;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::MalformedInput, std::string("bad set family: ") + e.what());
  }
}

nlohmann::json to_json(const SetFamily& f) {
  nlohmann::json sets = nlohmann::json::array();
  for (Mask s : f.sets) {
    nlohmann::json elems = nlohmann::json::array();
    for (std::uint32_t e = 0; e < 32; ++e) {
      if ((s >> e) & 1u) elems.push_back(e + 1);
    }
    sets.push_back(std::move(elems));
  }
  return {{"n", f.n}, {"sets", std::move(sets)}};
}

BigInt setpartition_brute(const SetFamily& f, std::uint32_t k) {
  validate(f);
  if (f.sets.size() > 20) throw Error(ErrorKind::TooLarge, "brute set partition limited to 20 sets");
  const std::uint32_t count = static_cast<std::uint32_t>(f.sets.size());
  BigInt total = 0;
  for (std::uint32_t pick = 0; pick < (1u << count); ++pick) {
    if (static_cast<std::uint32_t>(std::popcount(pick)) != k) continue;
    Mask covered = 0;
    bool disjoint = true;
    for (std::uint32_t i = 0; i < count && disjoint; ++i) {
      if (!((pick >> i) & 1u)) continue;
      disjoint = (covered & f.sets[i]) == 0;
      covered |= f.sets[i];
    }
    if (disjoint && covered == f.universe()) total += 1;
  }
  return total;
}

BigInt partitions_below(const SetFamily& f, Mask a, std::uint32_t bound, std::uint32_t k) {
  if (std::popcount(a) > 20) throw Error(ErrorKind::TooLarge, "z variable limited to |A| <= 20");
  // Every used set is nonempty, so more sets than elements is impossible.
  if (k > static_cast<std::uint32_t>(std::popcount(a))) return 0;
  // dp[X][k] over the subsets X of A reachable by removing the set holding
  // the current minimum; counts stay small enough to memoize as BigInt.
  std::unordered_map<std::uint64_t, BigInt> memo;
  auto rec = [&](auto&& self, Mask x, std::uint32_t left) -> BigInt {
    if (x == 0) return left == 0 ? BigInt(1) : BigInt(0);
    if (left == 0) return 0;
    const auto lowest = static_cast<std::uint32_t>(std::countr_zero(x));
    if (lowest >= bound) return 0;
    const std::uint64_t key = (std::uint64_t{x} << 8) | left;
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    BigInt total = 0;
    for (Mask s : f.sets) {
      if (((s >> lowest) & 1u) && (s & ~x) == 0) total += self(self, x & ~s, left - 1);
    }
    memo.emplace(key, total);
    return total;
  };
  return rec(rec, a, k);
}

BigInt z_var_dp(const SetFamily& f, Mask a, Mask b, std::uint32_t k) {
  if (b == 0) throw Error(ErrorKind::PreconditionViolated, "z variable needs a nonempty B");
  return partitions_below(f, a, static_cast<std::uint32_t>(std::countr_zero(b)), k);
}

}  // namespace polyoracle::exp
