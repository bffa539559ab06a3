#include "polyoracle/expalgos/set_partition.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "polyoracle/common/error.hpp"

namespace polyoracle::exp {

namespace {

std::uint32_t size_of(Mask m) { return static_cast<std::uint32_t>(std::popcount(m)); }
std::uint32_t min_of(Mask m) { return m ? static_cast<std::uint32_t>(std::countr_zero(m)) : 32; }

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

}  // namespace

void check_partition_preconditions(const SetFamily& f, std::uint32_t theta) {
  validate(f);
  if (theta < 1 || theta > 3) throw Error(ErrorKind::PreconditionViolated, "theta must be 1, 2 or 3");
  if (f.n > 12) throw Error(ErrorKind::TooLarge, "set partition traces limited to n <= 12");
  for (Mask s : f.sets) {
    if (2 * theta * size_of(s) > f.n && s != 0) {
      throw Error(ErrorKind::PreconditionViolated, "set larger than n / (2 theta)");
    }
  }
}

void for_each_partition_term(const SetFamily& f, std::uint32_t k, std::uint32_t theta,
                             const std::function<void(const PartitionTerm&, const BigInt&)>& visit,
                             PartitionStats* stats) {
  check_partition_preconditions(f, theta);
  const std::uint32_t n = f.n;
  const Mask universe = f.universe();
  std::map<std::tuple<Mask, std::uint32_t, std::uint32_t>, BigInt> z_memo;
  const auto z = [&](Mask a, std::uint32_t bound, std::uint32_t sets) -> const BigInt& {
    const auto key = std::make_tuple(a, bound, sets);
    auto it = z_memo.find(key);
    if (it == z_memo.end()) it = z_memo.emplace(key, partitions_below(f, a, bound, sets)).first;
    return it->second;
  };

  std::map<Mask, std::size_t> distinct;  // nonempty set -> multiplicity y_B
  for (Mask s : f.sets) {
    if (s != 0 && 2 * theta * size_of(s) <= n) ++distinct[s];
  }

  PartitionTerm term;
  std::vector<BigInt> partial{1};  // running product per group depth

  // Emits x_{k - used} times the product; term.groups already set.
  const auto finish = [&](std::uint32_t used) {
    if (used > k) return;
    term.empties = k - used;
    const BigInt value = binomial(f.empty_count(), term.empties) * partial.back();
    if (value == 0) return;
    if (stats) {
      ++stats->terms;
      std::uint64_t degree = 1;
      for (const auto& g : term.groups) degree += g.b ? 2 : 1;
      stats->max_degree = std::max(stats->max_degree, degree);
    }
    visit(term, value);
  };

  // Chooses the next group on the uncovered elements `rest`.
  const auto group = [&](auto&& self, Mask rest, std::uint32_t used) -> void {
    if (rest == 0) return finish(used);
    // Final group: A = rest, no B, unbounded minima.
    if (theta * size_of(rest) <= n) {
      for (std::uint32_t kj = 1; used + kj <= k; ++kj) {
        const BigInt& za = z(rest, 32, kj);
        if (za == 0) continue;
        term.groups.push_back({rest, 0, kj});
        partial.push_back(partial.back() * za);
        finish(used + kj);
        partial.pop_back();
        term.groups.pop_back();
      }
    }
    // B is a set of the family inside rest; A holds every element of rest
    // below min(B) plus any others, with theta|A| <= n < theta(|A| + |B|).
    for (const auto& [b, y] : distinct) {
      if ((b & ~rest) != 0) continue;
      const Mask below = rest & ((Mask{1} << min_of(b)) - 1);
      const Mask optional = rest & ~b & ~below;
      for (Mask x = optional;; x = (x - 1) & optional) {
        const Mask a = below | x;
        if (theta * size_of(a) <= n && theta * (size_of(a) + size_of(b)) > n) {
          for (std::uint32_t kj = 1; used + kj <= k; ++kj) {
            const BigInt& za = z(a, min_of(b), kj - 1);
            if (za == 0) continue;
            term.groups.push_back({a, b, kj});
            partial.push_back(partial.back() * static_cast<unsigned long>(y) * za);
            self(self, rest & ~a & ~b, used + kj);
            partial.pop_back();
            term.groups.pop_back();
          }
        }
        if (x == 0) break;
      }
    }
  };
  group(group, universe, 0);
}

PartitionTerm partition_term_of(const SetFamily& f, const std::vector<std::uint32_t>& indices,
                                std::uint32_t theta) {
  std::vector<Mask> chosen;
  std::uint32_t empties = 0;
  for (auto i : indices) {
    if (f.sets.at(i) == 0) {
      ++empties;
    } else {
      chosen.push_back(f.sets[i]);
    }
  }
  std::sort(chosen.begin(), chosen.end(), [](Mask x, Mask y) { return min_of(x) < min_of(y); });
  PartitionTerm term;
  term.empties = empties;
  PartitionGroup current;
  for (Mask s : chosen) {
    if (theta * (size_of(current.a) + size_of(s)) > f.n) {
      current.b = s;
      ++current.sets;
      term.groups.push_back(current);
      current = {};
    } else {
      current.a |= s;
      ++current.sets;
    }
  }
  if (current.sets > 0) term.groups.push_back(current);
  return term;
}

BigInt setpartition_via_traces(const SetFamily& f, std::uint32_t k, std::uint32_t theta, PartitionStats* stats) {
  BigInt total = 0;
  for_each_partition_term(f, k, theta, [&](const PartitionTerm&, const BigInt& v) { total += v; }, stats);
  return total;
}

}  // namespace polyoracle::exp
